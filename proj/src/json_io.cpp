/*
   Copyright 2026 The posflag authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "posflag/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

namespace posflag::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Err::Schema, what); }

const json& req(const json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing key '") + key + "'");
    return *it;
}

std::string req_str(const json& j, const char* key) {
    const json& v = req(j, key);
    if (!v.is_string()) bad(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

size_t req_size(const json& j, const char* key) {
    const json& v = req(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("key '") + key + "' must be a non-negative integer");
    return v.get<size_t>();
}

mpz_class parse_int(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) bad("bad integer '" + s + "'");
    for (size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) bad("bad integer '" + s + "'");
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

mpz_class int_from_json(const json& j) {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()), 10);
    bad("expected an integer");
}

mpq_class parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return mpq_class(parse_int(s));
    const mpz_class num = parse_int(s.substr(0, slash)), den = parse_int(s.substr(slash + 1));
    if (den == 0) bad("zero denominator in '" + s + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

ZPoly zpoly_from_json(const json& j) {
    if (!j.is_array()) bad("polynomial coefficients must be an array");
    std::vector<mpz_class> c;
    for (const auto& x : j) c.push_back(int_from_json(x));
    return ZPoly(std::move(c));
}

json zpoly_to_json(const ZPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    if (p.is_zero()) a.push_back("0");
    return a;
}

bool any_ratfunc(const json& j) {
    if (j.is_object()) {
        if (j.contains("num") && j.contains("den") && j.size() == 2) return true;
        for (const auto& [k, v] : j.items())
            if (any_ratfunc(v)) return true;
    } else if (j.is_array()) {
        for (const auto& v : j)
            if (any_ratfunc(v)) return true;
    }
    return false;
}

}  // namespace

// ---------------------------------------------------------------- scalars

json to_json(const FieldElement& x) {
    if (x.is_rational()) return x.rational().get_str();
    return json{{"num", zpoly_to_json(x.ratfunc().num())}, {"den", zpoly_to_json(x.ratfunc().den())}};
}

FieldElement field_from_json(const json& j, FieldKind k) {
    if (j.is_object()) {
        if (k == FieldKind::rational) bad("Q(t) value given where the field is Q");
        const ZPoly num = zpoly_from_json(req(j, "num")), den = zpoly_from_json(req(j, "den"));
        if (den.is_zero()) bad("zero denominator polynomial");
        return FieldElement(RatFunc(num, den));
    }
    if (j.is_string()) return FieldElement::from_rational(parse_rational(j.get<std::string>()), k);
    if (j.is_number_integer()) return FieldElement::from_rational(mpq_class(int_from_json(j)), k);
    bad("field elements are strings or {num, den} objects");
}

FieldKind detect_kind(const json& j) { return any_ratfunc(j) ? FieldKind::ratfunc : FieldKind::rational; }

json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Vector vector_from_json(const json& j, FieldKind k) {
    if (!j.is_array()) bad("expected an array of field elements");
    Vector v;
    for (const auto& x : j) v.push_back(field_from_json(x, k));
    return v;
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
    return json{{"n", m.rows()}, {"entries", rows}};
}

Matrix matrix_from_json(const json& j, FieldKind k) {
    const json& e = j.is_array() ? j : req(j, "entries");
    if (!e.is_array() || e.empty()) bad("matrix entries must be a non-empty array of rows");
    std::vector<Vector> rows;
    for (const auto& r : e) rows.push_back(vector_from_json(r, k));
    for (const auto& r : rows)
        if (r.size() != rows.size()) bad("matrix must be square");
    if (j.is_object() && j.contains("n") && req_size(j, "n") != rows.size()) bad("matrix size does not match 'n'");
    return Matrix::from_rows(rows);
}

json to_json(const UPoly& p) { return to_json(p.coeffs()); }

// ---------------------------------------------------------------- flags and polygons

json to_json(const Flag& f) { return json{{"n", f.n()}, {"basis", to_json(f.basis())}}; }

Flag flag_from_json(const json& j, FieldKind k) {
    const Matrix b = matrix_from_json(req(j, "basis"), k);
    if (j.contains("n") && req_size(j, "n") != b.rows()) bad("flag size does not match 'n'");
    return Flag(b);
}

json to_json(const FlagTuple& t) {
    json a = json::array();
    for (const auto& f : t) a.push_back(to_json(f));
    return a;
}

FlagTuple tuple_from_json(const json& j, FieldKind k) {
    if (!j.is_array()) bad("a flag tuple is an array of flags");
    FlagTuple t;
    for (const auto& f : j) t.push_back(flag_from_json(f, k));
    for (const auto& f : t)
        if (f.n() != t.front().n()) throw Error(Err::SchemaMismatch, "flags of different dimensions");
    return t;
}

json to_json(const IdealTriangulation& t) {
    json d = json::array();
    for (const auto& e : t.diagonals) d.push_back({e[0], e[1]});
    return json{{"k", t.k}, {"diagonals", d}, {"preferred", t.preferred}};
}

IdealTriangulation triangulation_from_json(const json& j) {
    IdealTriangulation t;
    t.k = req_size(j, "k");
    for (const auto& d : req(j, "diagonals")) {
        if (!d.is_array() || d.size() != 2) bad("a diagonal is a pair of vertices");
        t.diagonals.push_back({d[0].get<size_t>(), d[1].get<size_t>()});
    }
    for (const auto& p : req(j, "preferred")) t.preferred.push_back(p.get<size_t>());
    t.validate();
    return t;
}

json to_json(const PositivityCoordinates& c) {
    json o = json::object();
    for (const auto& [key, v] : c.keyed()) o[key] = to_json(v);
    return o;
}

PositivityCoordinates positivity_coords_from_json(const json& j, const IdealTriangulation& tri, size_t n, FieldKind k) {
    if (!j.is_object()) bad("coordinates must be an object");
    std::map<std::string, FieldElement> m;
    for (const auto& [key, v] : j.items()) m.emplace(key, field_from_json(v, k));
    return PositivityCoordinates::from_keyed(m, tri, n);
}

// ---------------------------------------------------------------- laminations

json to_json(const LaminationGraph& lam) {
    json tris = json::array(), inf = json::array(), closed = json::array();
    for (const auto& t : lam.triangles) tris.push_back({{"id", t.id}, {"vertices", t.vertices}});
    for (const auto& h : lam.infinite_leaves)
        inf.push_back({{"id", h.id}, {"plus", h.plus}, {"minus", h.minus}, {"left", h.left}, {"right", h.right}});
    for (const auto& g : lam.closed_leaves) {
        json o{{"id", g.id}, {"plus", g.plus}, {"minus", g.minus}};
        if (g.left) o["left"] = *g.left;
        if (g.right) o["right"] = *g.right;
        json sides = json::object();
        auto side = [](const SpiralSide& s) {
            json leaves = json::array(), ts = json::array();
            for (const auto& l : s.leaves) leaves.push_back({{"leaf", l.leaf}, {"toward", l.toward}});
            for (const auto& t : s.triangles) ts.push_back({{"triangle", t.triangle}, {"vertex", t.vertex}});
            return json{{"direction", s.with_orientation ? "with" : "against"}, {"leaves", leaves}, {"triangles", ts}};
        };
        if (g.left_side) sides["left"] = side(*g.left_side);
        if (g.right_side) sides["right"] = side(*g.right_side);
        o["sides"] = sides;
        closed.push_back(o);
    }
    return json{{"endpoints", lam.endpoints}, {"triangles", tris}, {"infinite_leaves", inf}, {"closed_leaves", closed}};
}

LaminationGraph lamination_from_json(const json& j) {
    LaminationGraph lam;
    for (const auto& e : req(j, "endpoints")) {
        if (!e.is_string()) bad("endpoint labels are strings");
        lam.endpoints.push_back(e.get<std::string>());
    }
    for (const auto& t : req(j, "triangles")) {
        const json& v = req(t, "vertices");
        if (!v.is_array() || v.size() != 3) bad("a triangle has three vertices");
        lam.triangles.push_back({req_str(t, "id"), {v[0].get<std::string>(), v[1].get<std::string>(), v[2].get<std::string>()}});
    }
    for (const auto& h : req(j, "infinite_leaves"))
        lam.infinite_leaves.push_back(
            {req_str(h, "id"), req_str(h, "plus"), req_str(h, "minus"), req_str(h, "left"), req_str(h, "right")});
    if (j.contains("closed_leaves"))
        for (const auto& g : j.at("closed_leaves")) {
            ClosedLeaf c;
            c.id = req_str(g, "id");
            c.plus = req_str(g, "plus");
            c.minus = req_str(g, "minus");
            if (g.contains("left")) c.left = req_str(g, "left");
            if (g.contains("right")) c.right = req_str(g, "right");
            if (g.contains("sides")) {
                for (const auto& [name, s] : g.at("sides").items()) {
                    if (name != "left" && name != "right") bad("spiral side must be 'left' or 'right'");
                    SpiralSide side;
                    const std::string dir = req_str(s, "direction");
                    if (dir != "with" && dir != "against") bad("spiral direction must be 'with' or 'against'");
                    side.with_orientation = dir == "with";
                    for (const auto& l : req(s, "leaves")) {
                        const json& tw = req(l, "toward");
                        if (!tw.is_boolean()) bad("'toward' must be a boolean");
                        side.leaves.push_back({req_str(l, "leaf"), tw.get<bool>()});
                    }
                    for (const auto& t : req(s, "triangles")) {
                        const json& v = req(t, "vertex");
                        if (!v.is_number_integer()) bad("spiral vertex must be an integer");
                        side.triangles.push_back({req_str(t, "triangle"), v.get<int>()});
                    }
                    (name == "left" ? c.left_side : c.right_side) = side;
                }
            }
            lam.closed_leaves.push_back(std::move(c));
        }
    lam.validate();
    return lam;
}

json to_json(const CoordinateVector& c) {
    json o = json::object();
    for (const auto& [key, v] : c.entries()) o[key] = to_json(v);
    return json{{"n", c.n()}, {"coordinates", o}};
}

CoordinateVector coordinates_from_json(const json& j, const LaminationGraph& lam, FieldKind k) {
    const size_t n = req_size(j, "n");
    const json& o = req(j, "coordinates");
    if (!o.is_object()) bad("'coordinates' must be an object");
    const auto schema = coordinate_schema(lam, n);
    if (o.size() != schema.size())
        throw Error(Err::SchemaMismatch, "expected " + std::to_string(schema.size()) + " coordinates, got " +
                                             std::to_string(o.size()));
    std::vector<std::pair<std::string, FieldElement>> e;
    for (const auto& key : schema) {
        auto it = o.find(key);
        if (it == o.end()) throw Error(Err::SchemaMismatch, "missing coordinate '" + key + "'");
        e.emplace_back(key, field_from_json(*it, k));
    }
    return CoordinateVector(n, std::move(e));
}

json to_json(const FlagDecoration& d) {
    json o = json::object();
    for (const auto& [label, f] : d) o[label] = to_json(f);
    return o;
}

FlagDecoration decoration_from_json(const json& j, FieldKind k) {
    if (!j.is_object()) bad("a decoration maps labels to flags");
    FlagDecoration d;
    for (const auto& [label, f] : j.items()) d.emplace(label, flag_from_json(f, k));
    return d;
}

// ---------------------------------------------------------------- representations

json to_json(const Representation& r) {
    json g = json::object();
    for (const auto& [name, m] : r.generators) g[name] = to_json(m);
    return json{{"genus", r.genus ? json(*r.genus) : json(nullptr)}, {"projective", r.projective}, {"generators", g}};
}

Representation representation_from_json(const json& j, FieldKind k) {
    Representation r;
    if (j.contains("genus") && !j.at("genus").is_null()) {
        if (!j.at("genus").is_number_integer()) bad("'genus' must be an integer or null");
        r.genus = j.at("genus").get<int>();
    }
    if (j.contains("projective")) {
        if (!j.at("projective").is_boolean()) bad("'projective' must be a boolean");
        r.projective = j.at("projective").get<bool>();
    }
    const json& g = req(j, "generators");
    if (!g.is_object() || g.empty()) bad("'generators' must be a non-empty object");
    for (const auto& [name, m] : g.items()) {
        if (parse_word(name) != Word{{name, 1}}) bad("bad generator name '" + name + "'");
        r.generators.emplace(name, matrix_from_json(m, k));
    }
    for (const auto& [name, m] : r.generators)
        if (m.rows() != r.n()) throw Error(Err::SchemaMismatch, "generators of different sizes");
    return r;
}

WitnessOrder witness_from_json(const json& j) {
    WitnessOrder w;
    const json& words = j.is_array() ? j : req(j, "words");
    for (const auto& x : words) {
        if (!x.is_string()) bad("witness words are strings");
        w.words.push_back(x.get<std::string>());
    }
    if (j.is_object() && j.contains("coincide"))
        for (const auto& grp : j.at("coincide")) w.coincide.push_back(grp.get<std::vector<std::string>>());
    return w;
}

json to_json(const RelationReport& r) {
    json checks = json::array(), failures = json::array(), skipped = json::array();
    for (const auto& c : r.checks) {
        json vals = json::object();
        for (const auto& [k, v] : c.values) vals[k] = to_json(v);
        json o{{"relation", c.relation}, {"instance", c.instance}, {"status", c.ok ? "pass" : "fail"}, {"values", vals}};
        if (!c.ok) failures.push_back(o);
        checks.push_back(std::move(o));
    }
    for (const auto& [inst, why] : r.skipped) skipped.push_back({{"instance", inst}, {"reason", why}});
    return json{{"ok", r.ok()}, {"checks", checks}, {"failures", failures}, {"skipped", skipped}};
}

// ---------------------------------------------------------------- fixtures

Fixture fixture_from_json(const json& j, FieldKind k) {
    Fixture f;
    f.lamination = lamination_from_json(req(j, "lamination"));
    for (const auto& [label, w] : req(j, "points").items()) f.points.emplace(label, w.get<std::string>());
    if (j.contains("holonomies"))
        for (const auto& [leaf, w] : j.at("holonomies").items()) f.holonomies.emplace(leaf, w.get<std::string>());
    if (j.contains("eigenvalue_ratios"))
        for (const auto& [leaf, v] : j.at("eigenvalue_ratios").items()) f.eigenvalue_ratios.emplace(leaf, field_from_json(v, k));
    f.representation = representation_from_json(req(j, "representation"), k);
    return f;
}

json read_json_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) bad("cannot read '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace posflag::io
