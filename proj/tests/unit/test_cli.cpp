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


#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "../support/generators.hpp"
#include "posflag/cli.hpp"
#include "posflag/json_io.hpp"

using namespace posflag;
using namespace posflag::test;
using io::json;

namespace {

const FieldKind Q = FieldKind::rational;
const std::string fixtures = POSFLAG_FIXTURES;

struct Result {
    int code;
    std::string out, err;
    json j() const { return json::parse(out); }
};

Result run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

Result run(const std::vector<std::string>& args, const json& input) { return run(args, input.dump()); }

std::string temp_file(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / ("posflag_test_" + name);
    std::ofstream(p) << text;
    return p.string();
}

json flags_json(const FlagTuple& t) { return json{{"flags", io::to_json(t)}}; }

}  // namespace

TEST_CASE("ratios") {
    const Flag asc = Flag::ascending(3, Q), desc = Flag::descending(3, Q);
    const Matrix u = generate_tp_unipotent(3, {q(1), q(1), q(1)}, Side::lower);
    const Result r = run({"ratio", "triple", "--a", "1", "--b", "1", "--c", "1"}, flags_json({asc, act(u, asc), desc}));
    CHECK(r.code == cli::ok);
    CHECK(r.j() == io::to_json(triple_ratio(asc, act(u, asc), desc, 1, 1, 1)));

    Gen gen(81);
    const FlagTuple t = gen.transverse(4, 2);
    const Result d = run({"ratio", "double", "--a", "1"}, flags_json(t));
    CHECK(d.code == cli::ok);
    CHECK(io::field_from_json(d.j(), Q) == double_ratio(t[0], t[1], t[2], t[3], 1));

    // wrong tuple length and out-of-range indices are input errors
    CHECK(run({"ratio", "triple", "--a", "1", "--b", "1", "--c", "1"}, flags_json({asc, desc})).code == cli::input_error);
    CHECK(run({"ratio", "double", "--a", "7"}, flags_json(t)).code == cli::input_error);
    // a vanishing denominator is a mathematical precondition
    const Result z = run({"ratio", "double", "--a", "1"}, flags_json({t[0], t[1], t[1], t[3]}));
    CHECK(z.code == cli::precondition_error);
    CHECK(z.j()["error"]["code"] == "NotTransverse");
    CHECK(z.err.rfind("error: ", 0) == 0);
}

TEST_CASE("flags and positivity") {
    Gen gen(82);
    const FlagTuple pos = gen.positive_tuple(5, 3);
    Result r = run({"flags", "positive"}, flags_json(pos));
    CHECK(r.code == cli::ok);
    CHECK(r.j()["positive"] == true);
    CHECK(r.j()["coordinates"] == io::to_json(phi(IdealTriangulation::fan(5), pos)));

    FlagTuple swapped = pos;
    std::swap(swapped[1], swapped[3]);
    CHECK(run({"flags", "positive"}, flags_json(swapped)).code == cli::verification_failed);

    json with_tri = flags_json(pos);
    with_tri["triangulation"] = io::to_json(IdealTriangulation::all(5).back());
    CHECK(run({"flags", "positive"}, with_tri).code == cli::ok);

    CHECK(run({"flags", "transverse"}, flags_json(pos)).j()["transverse"] == true);
    CHECK(run({"flags", "transverse"}, flags_json({pos[0], pos[0]})).code == cli::verification_failed);
}

TEST_CASE("total positivity") {
    Result g = run({"tp", "generate", "--n", "3", "--side", "lower"}, json::array({"1", "2", "1/2"}));
    CHECK(g.code == cli::ok);
    const Matrix m = io::matrix_from_json(g.j(), Q);
    CHECK(m == generate_tp_unipotent(3, {q(1), q(2), q(1, 2)}, Side::lower));
    CHECK(run({"tp", "check", "--side", "lower"}, g.out).code == cli::ok);
    CHECK(run({"tp", "check", "--side", "upper"}, g.out).code == cli::verification_failed);
    CHECK(run({"tp", "check"}, io::to_json(mat({{q(2), q(1)}, {q(1), q(1)}}))).code == cli::ok);
    CHECK(run({"tp", "check", "--side", "sideways"}, g.out).code == cli::input_error);
}

TEST_CASE("positive hyperbolicity") {
    const json m = io::to_json(Matrix::diagonal({q(-2), q(-1, 2)}));
    Result r = run({"poshyp", "certify", "--projective"}, m);
    CHECK(r.code == cli::ok);
    CHECK(r.j()["eigenvalues"] == json::array({"2", "1/2"}));
    CHECK(run({"poshyp", "certify"}, m).code == cli::verification_failed);

    json words{{"representation", {{"genus", nullptr}, {"projective", false}, {"generators", {{"a", io::to_json(Matrix::diagonal({q(2), q(1, 2)}))}}}}},
               {"words", {"a", "a^2"}}};
    r = run({"poshyp", "certify", "--n", "3"}, words);
    CHECK(r.code == cli::ok);
    CHECK(r.j()["verdicts"].size() == 2);
    words["words"] = {"z"};
    CHECK(run({"poshyp", "certify"}, words).code == cli::input_error);
}

TEST_CASE("lamination commands") {
    const std::string pants = fixtures + "/pants.json";
    Result c = run({"bd", "compute", "--n", "3", pants});
    REQUIRE(c.code == cli::ok);
    CHECK(c.j()["coordinates"].size() == 18);

    const std::string coords = temp_file("coords.json", c.out);
    CHECK(run({"bd", "verify", "--lamination", pants, coords}).code == cli::ok);

    json bad = c.j();
    bad["coordinates"]["y/h13/1"] = "-1";
    const Result v = run({"bd", "verify", "--lamination", pants, temp_file("bad.json", bad.dump())});
    CHECK(v.code == cli::verification_failed);
    CHECK(v.j()["ok"] == false);
    CHECK_FALSE(v.j()["failures"].empty());

    json missing = c.j();
    missing["coordinates"].erase("y/h13/1");
    CHECK(run({"bd", "verify", "--lamination", pants, temp_file("missing.json", missing.dump())}).code ==
          cli::input_error);

    const Result e = run({"bd", "eigenrel", "--n", "2", pants});
    CHECK(e.code == cli::ok);
    CHECK(e.j()["leaves"]["g1"]["indices"][0]["ratio"] == "441/16");

    // a Q(t) fixture needs --field ratfunc
    const std::string rf = fixtures + "/ratfunc_pants.json";
    CHECK(run({"bd", "compute", "--n", "2", rf}).code == cli::input_error);
    const Result rc = run({"--field", "ratfunc", "bd", "eigenrel", "--n", "2", rf});
    CHECK(rc.code == cli::ok);
}

TEST_CASE("reconstruction") {
    Gen gen(83);
    const FlagTuple t = gen.positive_tuple(4, 3);
    const IdealTriangulation tri = IdealTriangulation::fan(4);
    const json in{{"triangulation", io::to_json(tri)}, {"n", 3}, {"coordinates", io::to_json(phi(tri, t))}};
    const Result r = run({"bd", "reconstruct"}, in);
    REQUIRE(r.code == cli::ok);
    const FlagTuple back = io::tuple_from_json(r.j(), Q);
    CHECK(phi(tri, back) == phi(tri, t));
}

TEST_CASE("representation commands") {
    const Result r = run({"rep", "iota", "--n", "3"}, io::to_json(mat({{q(1), q(1)}, {q(0), q(1)}})));
    CHECK(r.code == cli::ok);
    CHECK(io::matrix_from_json(r.j(), Q) == mat({{q(1), q(1), q(1)}, {q(0), q(1), q(2)}, {q(0), q(0), q(1)}}));
    CHECK(run({"rep", "iota", "--n", "3"}, io::to_json(Matrix::diagonal({q(2), q(1)}))).code == cli::precondition_error);

    const json rep{{"genus", nullptr},
                   {"projective", false},
                   {"generators",
                    {{"a", io::to_json(Matrix::diagonal({q(2), q(1, 2)}))},
                     {"b", io::to_json(mat({{q(5, 4), q(-3, 4)}, {q(-3, 4), q(5, 4)}}))}}}};
    CHECK(run({"rep", "relation"}, rep).code == cli::ok);
    CHECK(run({"rep", "irreducible", "--n", "3"}, rep).j()["irreducible"] == true);

    json w{{"representation", rep}, {"witness", {"a", "b^-1", "a^-1", "b"}}};
    Result p = run({"rep", "positivity", "--n", "3"}, w);
    CHECK(p.code == cli::ok);
    CHECK(p.j()["triples"] == 4);
    w["witness"] = {"a", "a^-1", "b^-1", "b"};
    CHECK(run({"rep", "positivity", "--n", "3"}, w).code == cli::verification_failed);

    const Result l = run({"rep", "limits"}, json{{"representation", rep}, {"witness", {"a", "b"}}});
    CHECK(l.code == cli::ok);
    CHECK(l.j().contains("a"));
}

TEST_CASE("input errors") {
    CHECK(run({"rep", "iota", "--n", "3"}, std::string("{not json")).code == cli::input_error);
    CHECK(run({"rep", "iota"}, std::string("[]")).code == cli::input_error);
    CHECK(run({"frobnicate"}).code == cli::input_error);
    CHECK(run({}).code == cli::input_error);
    CHECK(run({"--field", "complex", "rep", "relation"}, std::string("{}")).code == cli::input_error);
    const Result missing = run({"bd", "compute", "/nonexistent/file.json"});
    CHECK(missing.code == cli::input_error);
    CHECK(missing.j().contains("error"));
    CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("output is canonical") {
    const std::string pants = fixtures + "/pants.json";
    const Result a = run({"bd", "compute", "--n", "2", pants});
    const Result b = run({"bd", "compute", "--n", "2", pants});
    CHECK(a.out == b.out);
    CHECK(a.j().dump(2) + "\n" == a.out);
}

TEST_CASE("installed binary") {
    const std::string out = (std::filesystem::temp_directory_path() / "posflag_test_binary.json").string();
    const std::string in = temp_file("iota_in.json", io::to_json(mat({{q(1), q(1)}, {q(0), q(1)}})).dump());
    auto sh = [&](const std::string& args) {
        const int st = std::system((std::string(POSFLAG_CLI) + " " + args + " > " + out + " 2>/dev/null").c_str());
        return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    };
    CHECK(sh("rep iota --n 3 " + in) == 0);
    std::ifstream f(out);
    const json j = json::parse(f);
    CHECK(io::matrix_from_json(j, Q) == iota(mat({{q(1), q(1)}, {q(0), q(1)}}), 3));
    CHECK(sh("rep iota --n 3 < " + in) == 0);
    CHECK(sh("bogus") == 2);
    CHECK(sh("bd verify --lamination " + fixtures + "/pants.json " + fixtures + "/pants.json") == 2);
}
