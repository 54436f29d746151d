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


#include "posflag/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iterator>
#include <sstream>

#include "posflag/json_io.hpp"

namespace posflag::cli {

namespace {

using io::json;

struct Ctx {
    FieldKind kind = FieldKind::rational;
    std::istream& in;
    std::ostream& out;

    json load(const std::string& path) const {
        if (path != "-") return io::read_json_file(path);
        std::string text(std::istreambuf_iterator<char>(in), {});
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw Error(Err::Schema, std::string("invalid JSON: ") + e.what());
        }
    }

    void emit(const json& j) const { out << j.dump(2) << '\n'; }
};

int verdict(bool b) { return b ? ok : verification_failed; }

// {"flags": [...]} or a bare array.
FlagTuple flags_arg(const json& j, FieldKind k, size_t expected = 0) {
    const FlagTuple t = io::tuple_from_json(j.is_array() ? j : j.at("flags"), k);
    if (expected && t.size() != expected)
        throw Error(Err::Schema, "expected " + std::to_string(expected) + " flags, got " + std::to_string(t.size()));
    if (t.empty()) throw Error(Err::Schema, "empty flag tuple");
    return t;
}

Side side_arg(const std::string& s) { return s == "lower" ? Side::lower : Side::upper; }

// A representation, optionally pushed through iota when its generators are 2 x 2.
Representation rep_arg(const json& j, FieldKind k, size_t n) {
    Representation r = io::representation_from_json(j.contains("representation") ? j.at("representation") : j, k);
    if (n && r.n() != n) {
        if (r.n() != 2) throw Error(Err::SchemaMismatch, "only 2 x 2 generators can be mapped by iota");
        r = iota(r, n);
    }
    return r;
}

struct BdInput {
    LaminationGraph lam;
    FlagDecoration dec;
    std::map<std::string, Matrix> holonomies;
    size_t n = 0;
};

// Either a fixture (points + representation) or {"lamination", "decoration", "holonomies"?}.
BdInput bd_arg(const json& j, FieldKind k, size_t n) {
    BdInput b;
    if (j.contains("decoration")) {
        b.lam = io::lamination_from_json(j.at("lamination"));
        b.dec = io::decoration_from_json(j.at("decoration"), k);
        if (b.dec.empty()) throw Error(Err::Schema, "empty decoration");
        b.n = b.dec.begin()->second.n();
        if (n && n != b.n) throw Error(Err::SchemaMismatch, "--n differs from the decoration dimension");
        if (j.contains("holonomies"))
            for (const auto& [leaf, m] : j.at("holonomies").items()) b.holonomies.emplace(leaf, io::matrix_from_json(m, k));
        return b;
    }
    const io::Fixture f = io::fixture_from_json(j, k);
    b.lam = f.lamination;
    const Representation r = n ? rep_arg(j, k, n) : f.representation;
    b.n = r.n();
    b.dec = decorate(r, f.points);
    for (const auto& [leaf, w] : f.holonomies) b.holonomies.emplace(leaf, word_image(r, w));
    return b;
}

json leaf_products_json(const LeafProducts& L) {
    json o = json::object();
    if (L.right) o["right"] = io::to_json(*L.right);
    if (L.left) o["left"] = io::to_json(*L.left);
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact positivity and coordinate computations for flag configurations", "posflag"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string field = "rational";
    app.add_option("--field", field, "Active field")->check(CLI::IsMember({"rational", "ratfunc"}));

    Ctx ctx{FieldKind::rational, in, out};
    std::function<int()> action;
    std::string input = "-";
    auto add_input = [&](CLI::App* c) { c->add_option("input", input, "JSON input file, - for standard input"); };
    auto leaf = [&](CLI::App* parent, const char* name, const char* help, std::function<int()> f) {
        CLI::App* c = parent->add_subcommand(name, help);
        add_input(c);
        c->callback([&action, f] { action = f; });
        return c;
    };

    int a = 1, b = 1, c = 1;
    size_t n = 0;
    std::string side = "none", gen_side = "upper";
    bool projective = false;
    size_t max_len = 0;
    std::string lam_path;

    // ratio
    CLI::App* ratio = app.add_subcommand("ratio", "Triple and double ratios");
    ratio->require_subcommand(1);
    {
        CLI::App* t = leaf(ratio, "triple", "T_abc(E, F, G)", [&] {
            const auto f = flags_arg(ctx.load(input), ctx.kind, 3);
            ctx.emit(io::to_json(triple_ratio(f[0], f[1], f[2], a, b, c)));
            return ok;
        });
        t->add_option("--a", a)->required();
        t->add_option("--b", b)->required();
        t->add_option("--c", c)->required();
        CLI::App* d = leaf(ratio, "double", "D_a(E, F, G, H)", [&] {
            const auto f = flags_arg(ctx.load(input), ctx.kind, 4);
            ctx.emit(io::to_json(double_ratio(f[0], f[1], f[2], f[3], a)));
            return ok;
        });
        d->add_option("--a", a)->required();
    }

    // flags
    CLI::App* flags = app.add_subcommand("flags", "Flag tuples");
    flags->require_subcommand(1);
    leaf(flags, "transverse", "Transversality of a tuple", [&] {
        const bool v = is_transverse(flags_arg(ctx.load(input), ctx.kind));
        ctx.emit({{"transverse", v}});
        return verdict(v);
    });
    leaf(flags, "positive", "Positivity of a tuple with respect to a triangulation", [&] {
        const json j = ctx.load(input);
        const FlagTuple t = flags_arg(j, ctx.kind);
        const IdealTriangulation tri = j.is_object() && j.contains("triangulation")
                                           ? io::triangulation_from_json(j.at("triangulation"))
                                           : IdealTriangulation::fan(t.size());
        json o{{"triangulation", io::to_json(tri)}};
        const bool tr = is_transverse(t);
        o["transverse"] = tr;
        bool pos = false;
        if (tr) {
            const auto coords = phi(tri, t);
            pos = coords.all_positive();
            o["coordinates"] = io::to_json(coords);
        }
        o["positive"] = pos;
        ctx.emit(o);
        return verdict(pos);
    });

    // tp
    CLI::App* tp = app.add_subcommand("tp", "Total positivity");
    tp->require_subcommand(1);
    {
        CLI::App* chk = leaf(tp, "check", "Total positivity, or TP unipotence with --side", [&] {
            const json j = ctx.load(input);
            const Matrix m = io::matrix_from_json(j.contains("matrix") ? j.at("matrix") : j, ctx.kind);
            if (side == "none") {
                const bool v = is_totally_positive(m);
                ctx.emit({{"totally_positive", v}});
                return verdict(v);
            }
            const bool v = is_tp_unipotent(m, side_arg(side));
            ctx.emit({{"tp_unipotent", v}, {"side", side}});
            return verdict(v);
        });
        chk->add_option("--side", side)->check(CLI::IsMember({"upper", "lower", "none"}))->default_val("none");
        CLI::App* gen = leaf(tp, "generate", "TP unipotent matrix from positive parameters", [&] {
            const json j = ctx.load(input);
            const Vector p = io::vector_from_json(j.is_array() ? j : j.at("params"), ctx.kind);
            ctx.emit(io::to_json(generate_tp_unipotent(n, p, side_arg(gen_side))));
            return ok;
        });
        gen->add_option("--n", n)->required();
        gen->add_option("--side", gen_side)->check(CLI::IsMember({"upper", "lower"}))->default_val("upper");
    }

    // poshyp
    CLI::App* ph = app.add_subcommand("poshyp", "Positive hyperbolicity");
    ph->require_subcommand(1);
    {
        CLI::App* cert = leaf(ph, "certify", "Sturm certificate for a matrix or for words in a representation", [&] {
            const json j = ctx.load(input);
            if (j.contains("words")) {
                const Representation r = rep_arg(j, ctx.kind, n);
                const auto words = j.at("words").get<std::vector<std::string>>();
                json rows = json::array();
                bool all = true;
                for (const auto& v : certify_positively_hyperbolic(r, words)) {
                    json row{{"word", v.word}, {"positively_hyperbolic", v.verdict}};
                    if (!v.error.empty()) row["error"] = v.error;
                    all = all && v.verdict;
                    rows.push_back(row);
                }
                ctx.emit({{"projective", r.projective}, {"verdicts", rows}});
                return verdict(all);
            }
            const Matrix m = io::matrix_from_json(j.contains("matrix") ? j.at("matrix") : j, ctx.kind);
            const bool v = is_positively_hyperbolic(m, projective);
            json o{{"positively_hyperbolic", v}, {"projective", projective}};
            if (v) {
                const Matrix lift = is_positively_hyperbolic(m, false) ? m : -m;
                o["eigenvalues"] = io::to_json(eigen_in_field(lift).eigenvalues);
            }
            ctx.emit(o);
            return verdict(v);
        });
        cert->add_flag("--projective", projective, "Accept either lift");
        cert->add_option("--n", n, "Apply iota_n to 2 x 2 generators");
    }

    // bd
    CLI::App* bd = app.add_subcommand("bd", "Coordinates on laminations and polygons");
    bd->require_subcommand(1);
    {
        CLI::App* comp = leaf(bd, "compute", "Coordinate vector of a decorated lamination", [&] {
            const BdInput b = bd_arg(ctx.load(input), ctx.kind, n);
            ctx.emit(io::to_json(compute_coordinates(b.dec, b.lam, b.n)));
            return ok;
        });
        comp->add_option("--n", n, "Apply iota_n to 2 x 2 generators");
        CLI::App* ver = leaf(bd, "verify", "Check the relations on a coordinate vector", [&] {
            const json j = ctx.load(input);
            json lj;
            if (!lam_path.empty()) {
                lj = io::read_json_file(lam_path);
            } else if (j.contains("lamination")) {
                lj = j;
            } else {
                throw Error(Err::Schema, "no lamination given");
            }
            const LaminationGraph lam = io::lamination_from_json(lj.contains("lamination") ? lj.at("lamination") : lj);
            const CoordinateVector cv =
                io::coordinates_from_json(j.contains("coordinates") && j.at("coordinates").contains("coordinates")
                                              ? j.at("coordinates")
                                              : j,
                                          lam, ctx.kind);
            const RelationReport r = verify_relations(cv, lam);
            ctx.emit(io::to_json(r));
            return verdict(r.ok());
        });
        ver->add_option("--lamination", lam_path, "Lamination or fixture file");
        CLI::App* eig = leaf(bd, "eigenrel", "Closed-leaf products against holonomy eigenvalue ratios", [&] {
            const BdInput b = bd_arg(ctx.load(input), ctx.kind, n);
            json rows = json::object();
            bool all = true;
            for (const auto& [id, m] : b.holonomies) {
                const EigenRelation e = eigenvalue_relation(b.dec, b.lam, {id, m});
                json per = json::array();
                for (int a = 1; a < static_cast<int>(b.n); ++a)
                    per.push_back({{"a", a},
                                   {"ratio", io::to_json(e.ratios[a - 1])},
                                   {"products", leaf_products_json(closed_leaf_products(b.dec, b.lam, b.lam.closed_leaf(id), a, b.n))}});
                rows[id] = {{"holds", e.holds}, {"indices", per}};
                all = all && e.holds;
            }
            ctx.emit({{"holds", all}, {"leaves", rows}});
            return verdict(all);
        });
        eig->add_option("--n", n, "Apply iota_n to 2 x 2 generators");
        CLI::App* rec = leaf(bd, "reconstruct", "Flag tuple from polygon coordinates", [&] {
            const json j = ctx.load(input);
            const IdealTriangulation tri = io::triangulation_from_json(j.at("triangulation"));
            const size_t dim = n ? n : j.at("n").get<size_t>();
            const auto coords = io::positivity_coords_from_json(j.at("coordinates"), tri, dim, ctx.kind);
            ctx.emit(io::to_json(reconstruct_tuple(tri, coords, dim)));
            return ok;
        });
        rec->add_option("--n", n, "Flag dimension, otherwise read from the input");
    }

    // rep
    CLI::App* rep = app.add_subcommand("rep", "Representations");
    rep->require_subcommand(1);
    {
        CLI::App* io_ = leaf(rep, "iota", "Irreducible n-dimensional image of a 2 x 2 matrix or representation", [&] {
            const json j = ctx.load(input);
            if (j.contains("generators") || j.contains("representation")) {
                ctx.emit(io::to_json(rep_arg(j, ctx.kind, n)));
            } else {
                ctx.emit(io::to_json(iota(io::matrix_from_json(j.contains("matrix") ? j.at("matrix") : j, ctx.kind), n)));
            }
            return ok;
        });
        io_->add_option("--n", n)->required();
        CLI::App* rel = leaf(rep, "relation", "Surface relation check", [&] {
            const Representation r = rep_arg(ctx.load(input), ctx.kind, n);
            const bool v = verify_relation(r);
            ctx.emit({{"relation_holds", v}, {"genus", r.genus ? json(*r.genus) : json(nullptr)}});
            return verdict(v);
        });
        rel->add_option("--n", n, "Apply iota_n to 2 x 2 generators");
        CLI::App* lim = leaf(rep, "limits", "Stable flags of words", [&] {
            const json j = ctx.load(input);
            const Representation r = rep_arg(j, ctx.kind, n);
            const WitnessOrder w = io::witness_from_json(j.contains("witness") ? j.at("witness") : j);
            ctx.emit(io::to_json(limit_flags(r, w.words, w.coincide)));
            return ok;
        });
        lim->add_option("--n", n, "Apply iota_n to 2 x 2 generators");
        CLI::App* pos = leaf(rep, "positivity", "Positivity on a cyclically ordered witness set", [&] {
            const json j = ctx.load(input);
            const Representation r = rep_arg(j, ctx.kind, n);
            const WitnessReport wr = check_positive_on_witness(r, io::witness_from_json(j.at("witness")));
            json fails = json::array();
            for (const auto& f : wr.failures) fails.push_back({{"words", f.words}, {"reason", f.reason}});
            ctx.emit({{"ok", wr.ok()}, {"triples", wr.triples}, {"quadruples", wr.quadruples}, {"failures", fails}});
            return verdict(wr.ok());
        });
        pos->add_option("--n", n, "Apply iota_n to 2 x 2 generators");
        CLI::App* irr = leaf(rep, "irreducible", "Burnside span test", [&] {
            const json j = ctx.load(input);
            std::vector<Matrix> ms;
            if (j.is_array() || j.contains("matrices")) {
                for (const auto& m : j.is_array() ? j : j.at("matrices")) ms.push_back(io::matrix_from_json(m, ctx.kind));
            } else {
                for (const auto& [name, m] : rep_arg(j, ctx.kind, n).generators) ms.push_back(m);
            }
            const bool v = is_irreducible(ms, max_len ? std::optional<size_t>(max_len) : std::nullopt);
            ctx.emit({{"irreducible", v}});
            return verdict(v);
        });
        irr->add_option("--max-length", max_len, "Word length bound, default 2n");
        irr->add_option("--n", n, "Apply iota_n to 2 x 2 generators");
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    ctx.kind = field == "ratfunc" ? FieldKind::ratfunc : FieldKind::rational;

    auto fail = [&](int code, const std::string& name, const std::string& msg) {
        ctx.emit({{"error", {{"code", name}, {"message", msg}}}});
        err << "error: " << msg << '\n';
        return code;
    };
    try {
        return action();
    } catch (const Error& e) {
        return fail(is_input_error(e.code()) ? input_error : precondition_error, err_name(e.code()), e.what());
    } catch (const json::exception& e) {
        return fail(input_error, "SchemaError", e.what());
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args);
}

}  // namespace posflag::cli
