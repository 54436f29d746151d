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


#include "posflag/bd_coords.hpp"

#include <functional>
#include <set>

namespace posflag {

namespace {

const Flag& flag_of(const FlagDecoration& dec, const std::string& label) {
    auto it = dec.find(label);
    if (it == dec.end()) throw Error(Err::Schema, "decoration has no flag for '" + label + "'");
    return it->second;
}

void need_n(size_t n) {
    if (n < 2) throw Error(Err::Schema, "dimension must be at least 2");
}

}  // namespace

// ---------------------------------------------------------------- lamination

size_t LaminationGraph::coordinate_count(size_t n) const {
    return 3 * r() * (n - 1) * (n - 2) / 2 + (p() + q()) * (n - 1);
}

void LaminationGraph::validate() const {
    std::set<std::string> labels;
    for (const auto& e : endpoints)
        if (!labels.insert(e).second) throw Error(Err::Schema, "duplicate endpoint '" + e + "'");
    auto label = [&](const std::string& s, const std::string& where) {
        if (!labels.count(s)) throw Error(Err::Schema, where + " uses unknown endpoint '" + s + "'");
    };
    std::set<std::string> ids;
    auto fresh = [&](const std::string& id) {
        if (id.empty() || id.find('/') != std::string::npos) throw Error(Err::Schema, "bad object id '" + id + "'");
        if (!ids.insert(id).second) throw Error(Err::Schema, "duplicate object id '" + id + "'");
    };
    for (const auto& t : triangles) {
        fresh(t.id);
        for (const auto& v : t.vertices) label(v, "triangle " + t.id);
        if (t.vertices[0] == t.vertices[1] || t.vertices[1] == t.vertices[2] || t.vertices[0] == t.vertices[2])
            throw Error(Err::Schema, "triangle " + t.id + " repeats a vertex");
    }
    for (const auto& h : infinite_leaves) {
        fresh(h.id);
        for (const auto* s : {&h.plus, &h.minus, &h.left, &h.right}) label(*s, "leaf " + h.id);
    }
    for (const auto& g : closed_leaves) {
        fresh(g.id);
        label(g.plus, "leaf " + g.id);
        label(g.minus, "leaf " + g.id);
        if (g.left) label(*g.left, "leaf " + g.id);
        if (g.right) label(*g.right, "leaf " + g.id);
        for (const auto* side : {&g.left_side, &g.right_side}) {
            if (!*side) continue;
            for (const auto& l : (*side)->leaves) infinite_leaf(l.leaf);
            for (const auto& t : (*side)->triangles) {
                triangle(t.triangle);
                if (t.vertex < 0 || t.vertex > 2) throw Error(Err::Schema, "spiral vertex index out of range");
            }
        }
    }
}

const LamTriangle& LaminationGraph::triangle(const std::string& id) const {
    for (const auto& t : triangles)
        if (t.id == id) return t;
    throw Error(Err::Schema, "unknown triangle '" + id + "'");
}

const InfiniteLeaf& LaminationGraph::infinite_leaf(const std::string& id) const {
    for (const auto& h : infinite_leaves)
        if (h.id == id) return h;
    throw Error(Err::Schema, "unknown infinite leaf '" + id + "'");
}

const ClosedLeaf& LaminationGraph::closed_leaf(const std::string& id) const {
    for (const auto& g : closed_leaves)
        if (g.id == id) return g;
    throw Error(Err::Schema, "unknown closed leaf '" + id + "'");
}

// ---------------------------------------------------------------- decorations

FlagDecoration decorate(const Representation& rep, const std::map<std::string, std::string>& points) {
    std::vector<std::string> words;
    for (const auto& [label, w] : points) words.push_back(w);
    const auto flags = limit_flags(rep, words);
    FlagDecoration dec;
    for (const auto& [label, w] : points) dec.emplace(label, flags.at(w));
    return dec;
}

FlagDecoration act(const Matrix& g, const FlagDecoration& dec) {
    FlagDecoration out;
    for (const auto& [label, F] : dec) out.emplace(label, act(g, F));
    return out;
}

// ---------------------------------------------------------------- coordinate vectors

CoordinateVector::CoordinateVector(size_t n, std::vector<std::pair<std::string, FieldElement>> entries)
    : n_(n), entries_(std::move(entries)) {
    for (size_t i = 0; i < entries_.size(); ++i)
        if (!index_.emplace(entries_[i].first, i).second)
            throw Error(Err::Schema, "duplicate coordinate '" + entries_[i].first + "'");
}

const FieldElement& CoordinateVector::at(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw Error(Err::SchemaMismatch, "missing coordinate '" + key + "'");
    return entries_[it->second].second;
}

FieldElement& CoordinateVector::at(const std::string& key) {
    auto it = index_.find(key);
    if (it == index_.end()) throw Error(Err::SchemaMismatch, "missing coordinate '" + key + "'");
    return entries_[it->second].second;
}

std::string x_key(const std::string& t, int v, int a, int b, int c) {
    return "x/" + t + "/" + std::to_string(v) + "/" + std::to_string(a) + "." + std::to_string(b) + "." +
           std::to_string(c);
}

std::string y_key(const std::string& leaf, int m) { return "y/" + leaf + "/" + std::to_string(m); }

std::vector<std::string> coordinate_schema(const LaminationGraph& lam, size_t n) {
    need_n(n);
    std::vector<std::string> keys;
    for (const auto& t : lam.triangles)
        for (int v = 0; v < 3; ++v)
            for (const auto& [a, b, c] : abc_triples(n)) keys.push_back(x_key(t.id, v, a, b, c));
    for (const auto& h : lam.infinite_leaves)
        for (int m = 1; m < static_cast<int>(n); ++m) keys.push_back(y_key(h.id, m));
    for (const auto& g : lam.closed_leaves)
        for (int m = 1; m < static_cast<int>(n); ++m) keys.push_back(y_key(g.id, m));
    return keys;
}

// ---------------------------------------------------------------- invariants

FieldElement triangle_invariant(const FlagDecoration& dec, const LamTriangle& t, int v, int a, int b, int c) {
    if (v < 0 || v > 2) throw Error(Err::IndexOutOfRange, "triangle vertex index must be 0, 1 or 2");
    const auto& vs = t.vertices;
    return triple_ratio(flag_of(dec, vs[v]), flag_of(dec, vs[(v + 1) % 3]), flag_of(dec, vs[(v + 2) % 3]), a, b, c);
}

FieldElement shear_infinite(const FlagDecoration& dec, const InfiniteLeaf& h, int a) {
    return double_ratio(flag_of(dec, h.plus), flag_of(dec, h.minus), flag_of(dec, h.left), flag_of(dec, h.right), a);
}

FieldElement shear_closed(const FlagDecoration& dec, const ClosedLeaf& g, int a) {
    if (!g.left || !g.right) throw Error(Err::MissingArcData, "closed leaf " + g.id + " has no arc endpoints");
    return double_ratio(flag_of(dec, g.plus), flag_of(dec, g.minus), flag_of(dec, *g.left), flag_of(dec, *g.right), a);
}

CoordinateVector compute_coordinates(const FlagDecoration& dec, const LaminationGraph& lam, size_t n) {
    need_n(n);
    lam.validate();
    for (const auto& [label, F] : dec)
        if (F.n() != n) throw Error(Err::SchemaMismatch, "flag at '" + label + "' has the wrong dimension");
    std::vector<std::pair<std::string, FieldElement>> out;
    out.reserve(lam.coordinate_count(n));
    for (const auto& t : lam.triangles)
        for (int v = 0; v < 3; ++v)
            for (const auto& [a, b, c] : abc_triples(n))
                out.emplace_back(x_key(t.id, v, a, b, c), triangle_invariant(dec, t, v, a, b, c));
    for (const auto& h : lam.infinite_leaves)
        for (int m = 1; m < static_cast<int>(n); ++m) out.emplace_back(y_key(h.id, m), shear_infinite(dec, h, m));
    for (const auto& g : lam.closed_leaves)
        for (int m = 1; m < static_cast<int>(n); ++m) out.emplace_back(y_key(g.id, m), shear_closed(dec, g, m));
    return CoordinateVector(n, std::move(out));
}

// ---------------------------------------------------------------- closed leaves

namespace {

using DGet = std::function<FieldElement(const std::string& leaf, int a)>;
using TGet = std::function<FieldElement(const std::string& t, int v, int a, int b, int c)>;

FieldElement dbar_with(const DGet& D, const SpiralLeaf& h, int a, int n) { return D(h.leaf, h.toward ? a : n - a); }

// One side of one closed leaf, four cases by side and spiral direction.
FieldElement side_product(const DGet& D, const TGet& T, const SpiralSide& s, bool right, int a, int n) {
    if (s.leaves.empty() || s.triangles.empty()) throw Error(Err::MissingSpiralData, "empty spiral list");
    const int i = s.with_orientation ? a : n - a;
    FieldElement P = D(s.leaves.front().leaf, 1).one_like();
    for (const auto& h : s.leaves) P *= dbar_with(D, h, i, n);
    for (const auto& t : s.triangles)
        for (int b = 1; b < n - i; ++b) P *= T(t.triangle, t.vertex, i, b, n - i - b);
    const bool invert = s.with_orientation ? !right : right;
    return invert ? P.inv() : P;
}

LeafProducts products(const DGet& D, const TGet& T, const ClosedLeaf& g, int a, int n) {
    if (a < 1 || a >= n) throw Error(Err::IndexOutOfRange, "index a out of range");
    if (!g.left_side && !g.right_side) throw Error(Err::MissingSpiralData, "closed leaf " + g.id + " has no spiral data");
    LeafProducts out;
    if (g.right_side) out.right = side_product(D, T, *g.right_side, true, a, n);
    if (g.left_side) out.left = side_product(D, T, *g.left_side, false, a, n);
    return out;
}

}  // namespace

FieldElement dbar(const CoordinateVector& coords, const SpiralLeaf& h, int a) {
    const int n = static_cast<int>(coords.n());
    return coords.at(y_key(h.leaf, h.toward ? a : n - a));
}

FieldElement dbar(const FlagDecoration& dec, const LaminationGraph& lam, const SpiralLeaf& h, int a, size_t n) {
    return shear_infinite(dec, lam.infinite_leaf(h.leaf), h.toward ? a : static_cast<int>(n) - a);
}

LeafProducts closed_leaf_products(const CoordinateVector& coords, const LaminationGraph& lam, const ClosedLeaf& g,
                                  int a) {
    (void)lam;
    DGet D = [&](const std::string& l, int m) { return coords.at(y_key(l, m)); };
    TGet T = [&](const std::string& t, int v, int x, int y, int z) { return coords.at(x_key(t, v, x, y, z)); };
    return products(D, T, g, a, static_cast<int>(coords.n()));
}

LeafProducts closed_leaf_products(const FlagDecoration& dec, const LaminationGraph& lam, const ClosedLeaf& g, int a,
                                  size_t n) {
    DGet D = [&](const std::string& l, int m) { return shear_infinite(dec, lam.infinite_leaf(l), m); };
    TGet T = [&](const std::string& t, int v, int x, int y, int z) {
        return triangle_invariant(dec, lam.triangle(t), v, x, y, z);
    };
    return products(D, T, g, a, static_cast<int>(n));
}

// ---------------------------------------------------------------- relations

bool RelationReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::vector<const RelationCheck*> RelationReport::failures() const {
    std::vector<const RelationCheck*> out;
    for (const auto& c : checks)
        if (!c.ok) out.push_back(&c);
    return out;
}

RelationReport verify_relations(const CoordinateVector& coords, const LaminationGraph& lam) {
    lam.validate();
    const size_t n = coords.n();
    need_n(n);
    const auto schema = coordinate_schema(lam, n);
    if (schema.size() != coords.size()) throw Error(Err::SchemaMismatch, "coordinate count does not match the lamination");
    for (size_t i = 0; i < schema.size(); ++i)
        if (coords.entries()[i].first != schema[i])
            throw Error(Err::SchemaMismatch, "expected coordinate '" + schema[i] + "', got '" + coords.entries()[i].first + "'");

    RelationReport rep;
    for (const auto& [key, val] : coords.entries()) rep.checks.push_back({"positivity", key, val.sign() > 0, {{key, val}}});

    for (const auto& t : lam.triangles)
        for (int v = 0; v < 3; ++v)
            for (const auto& [a, b, c] : abc_triples(n)) {
                const auto k1 = x_key(t.id, v, a, b, c), k2 = x_key(t.id, (v + 1) % 3, b, c, a);
                const auto &x1 = coords.at(k1), &x2 = coords.at(k2);
                rep.checks.push_back({"rotation", k1 + "=" + k2, x1 == x2, {{k1, x1}, {k2, x2}}});
            }

    for (const auto& g : lam.closed_leaves)
        for (int a = 1; a < static_cast<int>(n); ++a) {
            const std::string inst = g.id + "/" + std::to_string(a);
            const auto L = closed_leaf_products(coords, lam, g, a);
            std::vector<std::pair<std::string, FieldElement>> vals;
            if (L.right) vals.emplace_back("right", *L.right);
            if (L.left) vals.emplace_back("left", *L.left);
            if (L.right && L.left)
                rep.checks.push_back({"closed_leaf_equality", inst, *L.right == *L.left, vals});
            else
                rep.skipped.emplace_back("closed_leaf_equality/" + inst, "spiral data on one side only");
            // With only the left side known, the equality defines the right product.
            const FieldElement& R = L.right ? *L.right : *L.left;
            rep.checks.push_back({"closed_leaf_inequality", inst, R > R.one_like(), vals});
        }
    return rep;
}

// ---------------------------------------------------------------- eigenvalues

EigenRelation eigenvalue_relation(const FlagDecoration& dec, const LaminationGraph& lam, const ClosedLeafHolonomy& hol) {
    const ClosedLeaf& g = lam.closed_leaf(hol.leaf);
    const Flag& Fp = flag_of(dec, g.plus);
    const Flag& Fm = flag_of(dec, g.minus);
    const size_t n = Fp.n();
    if (hol.holonomy.rows() != n || !hol.holonomy.is_square())
        throw Error(Err::SchemaMismatch, "holonomy has the wrong dimension");
    if (stable_flag(hol.holonomy) != Fp)
        throw Error(Err::NotDynamicsPreserving, "flag at " + g.plus + " is not the stable flag of the holonomy");
    if (unstable_flag(hol.holonomy) != Fm)
        throw Error(Err::NotDynamicsPreserving, "flag at " + g.minus + " is not the unstable flag of the holonomy");

    const EigenData ed = eigen_in_field(hol.holonomy);
    Vector lambda(n);
    std::vector<bool> used(n, false);
    for (size_t a = 1; a <= n; ++a) {
        size_t hit = n;
        for (size_t i = 0; i < n; ++i) {
            const Matrix e = Matrix::from_columns({ed.eigenvectors[i]});
            if (rank(Fp.subspace(a).hcat(e)) == a && rank(Fm.subspace(n - a + 1).hcat(e)) == n - a + 1) hit = i;
        }
        if (hit == n || used[hit]) throw Error(Err::NotDynamicsPreserving, "eigenlines do not match the flag pair");
        used[hit] = true;
        lambda[a - 1] = ed.eigenvalues[hit];
    }

    EigenRelation out;
    out.holds = true;
    for (int a = 1; a < static_cast<int>(n); ++a) {
        const FieldElement ratio = lambda[a - 1] / lambda[a];
        if (ratio.sign() <= 0 || ratio <= ratio.one_like())
            throw Error(Err::NotDynamicsPreserving, "eigenvalue order disagrees with the flag order");
        out.ratios.push_back(ratio);
        const auto L = closed_leaf_products(dec, lam, g, a, n);
        if (a == 1) out.products = L;
        if ((L.right && *L.right != ratio) || (L.left && *L.left != ratio)) out.holds = false;
    }
    return out;
}

bool eigenvalue_relation(const FlagDecoration& dec, const LaminationGraph& lam, const ClosedLeafHolonomy& hol, int a) {
    const EigenRelation r = eigenvalue_relation(dec, lam, hol);
    if (a < 1 || a > static_cast<int>(r.ratios.size())) throw Error(Err::IndexOutOfRange, "index a out of range");
    const auto L = closed_leaf_products(dec, lam, lam.closed_leaf(hol.leaf), a, r.ratios.size() + 1);
    const FieldElement& q = r.ratios[a - 1];
    return (!L.right || *L.right == q) && (!L.left || *L.left == q);
}

// ---------------------------------------------------------------- conjugacy

std::optional<Matrix> conjugacy_detect(const FlagDecoration& dec1, const FlagDecoration& dec2) {
    std::vector<std::string> labels;
    for (const auto& [label, F] : dec1) {
        if (!dec2.count(label)) throw Error(Err::SchemaMismatch, "label '" + label + "' missing from second decoration");
        labels.push_back(label);
    }
    if (dec2.size() != dec1.size()) throw Error(Err::SchemaMismatch, "decorations have different labels");

    bool found = false;
    const size_t m = labels.size();
    for (size_t i = 0; i < m && !found; ++i)
        for (size_t j = i + 1; j < m && !found; ++j)
            for (size_t k = j + 1; k < m && !found; ++k) {
                const auto &a = labels[i], &b = labels[j], &c = labels[k];
                found = is_transverse({dec1.at(a), dec1.at(b), dec1.at(c)}) &&
                        is_transverse({dec2.at(a), dec2.at(b), dec2.at(c)});
            }
    if (!found) throw Error(Err::NoTransverseTriple, "no triple of labels is transverse in both decorations");

    std::vector<std::pair<const Flag*, const Flag*>> pairs;
    for (const auto& l : labels) pairs.emplace_back(&dec1.at(l), &dec2.at(l));
    const auto sols = flag_maps(pairs);
    if (sols.empty()) return std::nullopt;

    auto accept = [&](const Matrix& g) {
        if (det(g).is_zero()) return false;
        for (const auto& l : labels)
            if (act(g, dec1.at(l)) != dec2.at(l)) return false;
        return true;
    };
    if (accept(sols[0])) return sols[0];
    if (sols.size() == 1) return std::nullopt;
    // Singular members are a proper subvariety; try a few combinations.
    for (long s = 1; s <= static_cast<long>(sols.size()) + 1; ++s) {
        Matrix g = sols[0];
        FieldElement w = FieldElement::from_int(s, g.kind());
        for (size_t i = 1; i < sols.size(); ++i) {
            g = g + w * sols[i];
            w = w * FieldElement::from_int(s, g.kind());
        }
        if (accept(g)) return g;
    }
    return std::nullopt;
}

}  // namespace posflag
