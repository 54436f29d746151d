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


#include <doctest.h>

#include "../support/generators.hpp"
#include "posflag/bd_coords.hpp"
#include "posflag/positivity.hpp"

using namespace posflag;
using namespace posflag::test;

namespace {

const FieldKind Q = FieldKind::rational;

Flag line2(long x, long y) {
    // flag in dimension 2 with line (x, y)
    return Flag(x != 0 ? cols({{q(x), q(y)}, {q(0), q(1)}}) : cols({{q(x), q(y)}, {q(1), q(0)}}));
}

FlagDecoration labelled(const FlagTuple& t) {
    FlagDecoration d;
    for (size_t i = 0; i < t.size(); ++i) d.emplace(std::to_string(i), t[i]);
    return d;
}

IdealTriangulation square() { return IdealTriangulation{4, {{1, 3}}, {1, 1}}; }

// Brute-force enumeration of every preferred vertex choice for one diagonal set.
std::vector<IdealTriangulation> with_all_preferred(const IdealTriangulation& base) {
    std::vector<IdealTriangulation> out;
    const auto tris = base.triangles();
    size_t total = 1;
    for (size_t i = 0; i < tris.size(); ++i) total *= 3;
    for (size_t code = 0; code < total; ++code) {
        IdealTriangulation t = base;
        size_t c = code;
        for (size_t i = 0; i < tris.size(); ++i, c /= 3) t.preferred[i] = tris[i][c % 3];
        out.push_back(t);
    }
    return out;
}

}  // namespace

TEST_CASE("triangulations") {
    CHECK(IdealTriangulation::all(4).size() == 2);
    CHECK(IdealTriangulation::all(5).size() == 5);
    CHECK(IdealTriangulation::all(6).size() == 14);
    const auto fan = IdealTriangulation::fan(5);
    CHECK(fan.diagonals.size() == 2);
    CHECK(fan.triangles().size() == 3);
    // e+ = 1, e- = 3: e^r = 2 on the clockwise arc from 1 to 3, e^l = 4
    CHECK(square().diagonal_quad(0) == std::array<size_t, 4>{1, 2, 3, 4});
    IdealTriangulation bad{4, {{1, 3}, {2, 4}}, {1, 1}};
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("TriangulationMismatch"), Error);
    IdealTriangulation wrong_pref{4, {{1, 3}}, {4, 1}};
    CHECK_THROWS_AS(wrong_pref.validate(), Error);
}

TEST_CASE("phi coordinates") {
    Gen gen(41);
    // k = 3: only the triple ratios of the single triangle
    const FlagTuple t3 = gen.transverse(3, 4);
    const auto c3 = phi(IdealTriangulation::fan(3), t3);
    CHECK(c3.D.empty());
    REQUIRE(c3.T.size() == 1);
    CHECK(c3.T[0].size() == 3);
    CHECK(c3.T[0][0] == triple_ratio(t3[0], t3[1], t3[2], 1, 1, 2));

    // k = 4, n = 2: clockwise <e1>, <e1+e2>, <e2>, <e1-e2>; frozen from tests/oracles/derive.py
    const FlagTuple sq{line2(1, 0), line2(1, 1), line2(0, 1), line2(1, -1)};
    const auto c4 = phi(square(), sq);
    REQUIRE(c4.D.size() == 1);
    CHECK(c4.D[0] == Vector{q(1)});
    CHECK(c4.D[0][0] == double_ratio(sq[0], sq[2], sq[1], sq[3], 1));
    CHECK(is_positive_tuple(sq, square()));

    // k = 5, n = 4: 3 triangles x 3 triples + 2 diagonals x 3
    const auto c5 = phi(IdealTriangulation::fan(5), gen.transverse(5, 4));
    CHECK(c5.keyed().size() == 15);
    CHECK_THROWS_WITH_AS(phi(IdealTriangulation::fan(5), gen.transverse(4, 4)), doctest::Contains("TriangulationMismatch"), Error);
}

TEST_CASE("keyed coordinates round trip") {
    Gen gen(42);
    const auto tri = IdealTriangulation::all(5)[2];
    const auto c = phi(tri, gen.transverse(5, 3));
    const auto keyed = c.keyed();
    CHECK(keyed.count("T/0/1,1,1") == 1);
    CHECK(keyed.count("D/1/2") == 1);
    CHECK(PositivityCoordinates::from_keyed(keyed, tri, 3) == c);
    auto missing = keyed;
    missing.erase("D/1/2");
    CHECK_THROWS_AS(PositivityCoordinates::from_keyed(missing, tri, 3), Error);
}

TEST_CASE("positive tuples") {
    Gen gen(43);
    for (int i = 0; i < 10; ++i) {
        const FlagTuple t = gen.positive_tuple(5, 3);
        CHECK(is_positive_tuple(t));
        FlagTuple rep = t;
        rep[3] = rep[1];
        CHECK_FALSE(is_positive_tuple(rep));
    }
    // n = 2: the verdict is the sign of the single cross ratio coordinate
    const FlagTuple sq{line2(1, 0), line2(1, 1), line2(0, 1), line2(1, -1)};
    CHECK(is_positive_tuple(sq, square()) == (phi(square(), sq).D[0][0].sign() > 0));
    const FlagTuple swapped{line2(1, 0), line2(0, 1), line2(1, 1), line2(1, -1)};
    CHECK(is_positive_tuple(swapped, square()) == (phi(square(), swapped).D[0][0].sign() > 0));
    CHECK_FALSE(is_positive_tuple(swapped, square()));
}

TEST_CASE("quadruple definition agrees with the square triangulation") {
    // Positive quadruple: (E,F,G), (E,G,H) positive and D_a(E,G,F,H) > 0. The square
    // triangulation with diagonal [1,3] reads D_a(F1, F3, F2, F4): the same expression.
    Gen gen(44);
    for (int i = 0; i < 30; ++i) {
        const size_t n = static_cast<size_t>(gen.integer(2, 4));
        FlagTuple t = i % 2 ? gen.positive_tuple(4, n) : gen.transverse(4, n);
        if (i % 3 == 0) std::swap(t[1], t[2]);
        const bool quad = is_positive_quadruple(t[0], t[1], t[2], t[3]);
        for (const auto& tri : IdealTriangulation::all(4))
            for (const auto& pref : with_all_preferred(tri)) CHECK(is_positive_tuple(t, pref) == quad);
    }
}

TEST_CASE("triangulation independence of the positivity verdict") {
    Gen gen(45);
    for (int i = 0; i < 4; ++i) {
        FlagTuple t = gen.positive_tuple(5, 3);
        if (i % 2) std::swap(t[0], t[3]);
        const bool v = is_positive_tuple(t);
        for (const auto& tri : IdealTriangulation::all(5))
            for (const auto& pref : with_all_preferred(tri)) CHECK(is_positive_tuple(t, pref) == v);
    }
}

TEST_CASE("total positivity") {
    CHECK(is_totally_positive(mat({{q(1), q(1)}, {q(1), q(2)}})));
    CHECK_FALSE(is_totally_positive(Matrix::identity(2, Q)));
    CHECK_FALSE(is_totally_positive(mat({{q(1), q(2)}, {q(1), q(2)}})));
    CHECK_THROWS_WITH_AS(is_totally_positive(Matrix::identity(8, Q)), doctest::Contains("DimensionTooLarge"), Error);

    const Matrix u3 = mat({{q(1), q(1), q(1)}, {q(0), q(1), q(2)}, {q(0), q(0), q(1)}});
    CHECK(is_tp_unipotent(u3, Side::upper));
    CHECK_FALSE(is_tp_unipotent(u3, Side::lower));
    CHECK(is_tp_unipotent(u3.transpose(), Side::lower));
    CHECK_FALSE(is_tp_unipotent(Matrix::identity(2, Q), Side::upper));
    // a non-forced minor vanishes: rows {1,2}, columns {2,3} of [[1,1,1],[0,1,1],[0,0,1]]
    CHECK_FALSE(is_tp_unipotent(mat({{q(1), q(1), q(1)}, {q(0), q(1), q(1)}, {q(0), q(0), q(1)}}), Side::upper));
}

TEST_CASE("generated TP unipotent matrices") {
    CHECK(generate_tp_unipotent(2, {q(1)}, Side::upper) == mat({{q(1), q(1)}, {q(0), q(1)}}));
    CHECK(is_tp_unipotent(generate_tp_unipotent(3, {q(1), q(1), q(1)}, Side::upper), Side::upper));
    CHECK(is_tp_unipotent(generate_tp_unipotent(3, {q(1), q(1), q(1)}, Side::lower), Side::lower));
    CHECK_THROWS_WITH_AS(generate_tp_unipotent(3, {q(1), q(0), q(1)}, Side::upper), doctest::Contains("NonPositiveParameter"),
                         Error);
    CHECK_THROWS_AS(generate_tp_unipotent(3, {q(1)}, Side::upper), Error);
    Gen gen(46);
    for (int i = 0; i < 20; ++i) {
        const size_t n = static_cast<size_t>(gen.integer(2, 5));
        const Matrix a = gen.tp_unipotent(n, Side::upper), b = gen.tp_unipotent(n, Side::upper);
        CHECK(is_tp_unipotent(a * b, Side::upper));
        const Matrix l = gen.tp_unipotent(n, Side::lower);
        if (n <= 4) CHECK(is_totally_positive(l * a));
    }
}

TEST_CASE("product closure") {
    Gen gen(47);
    for (int i = 0; i < 15; ++i) {
        const size_t n = static_cast<size_t>(gen.integer(2, 4));
        const Matrix a = gen.tp_unipotent(n, Side::lower) * gen.tp_unipotent(n, Side::upper);
        const Matrix b = gen.tp_unipotent(n, Side::lower) * gen.tp_unipotent(n, Side::upper);
        REQUIRE(is_totally_positive(a));
        CHECK(is_totally_positive(a * b));
    }
}

TEST_CASE("inverse entries of TP upper triangular matrices") {
    Gen gen(48);
    for (int i = 0; i < 20; ++i) {
        const size_t n = static_cast<size_t>(gen.integer(2, 5));
        // positive diagonal of determinant one times a TP unipotent
        Vector d;
        FieldElement prod = q(1);
        for (size_t j = 0; j + 1 < n; ++j) {
            d.push_back(FieldElement(gen.positive_rational(3, 3)));
            prod *= d.back();
        }
        d.push_back(prod.inv());
        const Matrix A = Matrix::diagonal(d) * gen.tp_unipotent(n, Side::upper);
        const Matrix B = gen.tp_unipotent(n, Side::upper);
        const Matrix Ai = inverse(A), BAi = inverse(B * A);
        for (size_t k = 0; k + 1 < n; ++k)
            CHECK(Ai(k, n - 1) / Ai(k + 1, n - 1) > BAi(k, n - 1) / BAi(k + 1, n - 1));
    }
}

TEST_CASE("normal form") {
    const Matrix u0 = generate_tp_unipotent(3, {q(1), q(1), q(1)}, Side::lower);
    const Flag asc = Flag::ascending(3, Q), desc = Flag::descending(3, Q);
    const TPWitness w = normal_form({asc, act(u0, asc), desc});
    CHECK(w.u == u0);
    CHECK(w.v_list.empty());

    const Matrix v0 = generate_tp_unipotent(3, {q(1), q(1), q(1)}, Side::upper);
    const TPWitness w4 = normal_form({asc, act(u0, asc), desc, act(inverse(v0), desc)});
    REQUIRE(w4.v_list.size() == 1);
    CHECK(w4.v_list[0] == v0);

    // reversal keeps positivity; a unipotent with a vanishing minor does not
    CHECK_NOTHROW(normal_form({asc, desc, act(u0, asc)}));
    const Matrix m0 = mat({{q(1), q(0), q(0)}, {q(1), q(1), q(0)}, {q(0), q(1), q(1)}});
    CHECK_THROWS_WITH_AS(normal_form({asc, act(m0, asc), desc}), doctest::Contains("NotPositive"), Error);

    Gen gen(49);
    for (int i = 0; i < 20; ++i) {
        const size_t n = static_cast<size_t>(gen.integer(2, 4));
        const size_t k = static_cast<size_t>(gen.integer(3, 5));
        const FlagTuple t = gen.positive_tuple(k, n);
        const TPWitness nf = normal_form(t);
        CHECK(is_tp_unipotent(nf.u, Side::lower));
        for (const auto& v : nf.v_list) CHECK(is_tp_unipotent(v, Side::upper));
        const auto tri = IdealTriangulation::fan(k);
        CHECK(phi(tri, tuple_from_witness(nf)) == phi(tri, t));
    }
}

TEST_CASE("reconstruction from coordinates") {
    // k = 3, n = 2: no coordinates, the standard triple
    const IdealTriangulation tri3 = IdealTriangulation::fan(3);
    const FlagTuple std3 = reconstruct_tuple(tri3, PositivityCoordinates{2, {Vector{}}, {}}, 2);
    CHECK(std3.size() == 3);
    CHECK(is_transverse(std3));

    Gen gen(50);
    for (int i = 0; i < 12; ++i) {
        const size_t n = static_cast<size_t>(gen.integer(2, 3));
        const size_t k = static_cast<size_t>(gen.integer(4, 5));
        const auto all = IdealTriangulation::all(k);
        const auto& tri = all[static_cast<size_t>(gen.integer(0, static_cast<long>(all.size()) - 1))];
        const FlagTuple t = gen.positive_tuple(k, n);
        const auto coords = phi(tri, t);
        const FlagTuple r = reconstruct_tuple(tri, coords, n);
        CHECK(phi(tri, r) == coords);
        const auto g = conjugacy_detect(labelled(t), labelled(r));
        REQUIRE(g.has_value());
        for (size_t j = 0; j < k; ++j) CHECK(act(*g, t[j]) == r[j]);
    }

    PositivityCoordinates bad = phi(IdealTriangulation::fan(4), gen.positive_tuple(4, 2));
    bad.D[0][0] = -bad.D[0][0];
    CHECK_THROWS_WITH_AS(reconstruct_tuple(IdealTriangulation::fan(4), bad, 2), doctest::Contains("NonPositiveCoordinate"), Error);
}

TEST_CASE("double ratio monotonicity") {
    Gen gen(51);
    for (int i = 0; i < 15; ++i) {
        const size_t n = static_cast<size_t>(gen.integer(2, 4));
        const FlagTuple t = gen.positive_tuple(5, n);
        CHECK(check_monotonicity(t));
        FlagTuple bad = t;
        std::swap(bad[1], bad[3]);
        CHECK_THROWS_WITH_AS(check_monotonicity(bad), doctest::Contains("NotPositive"), Error);
    }
    // n = 2: lines at 0, 1, infinity, then -3 < -1 on the arc back to 0
    const FlagTuple cr{line2(0, 1), line2(1, 1), line2(1, 0), line2(-3, 1), line2(-1, 1)};
    REQUIRE(is_positive_tuple(cr));
    CHECK(check_monotonicity(cr));
}

TEST_CASE("monotone chains") {
    Gen gen(52);
    for (int i = 0; i < 8; ++i) {
        const size_t n = static_cast<size_t>(gen.integer(2, 4));
        const FlagTuple t = gen.positive_tuple(7, n);
        REQUIRE(is_positive_tuple(t));
        for (int a = 1; a < static_cast<int>(n); ++a)
            for (size_t j = 3; j + 1 < 7; ++j)
                CHECK(double_ratio(t[0], t[2], t[1], t[j], a) < double_ratio(t[0], t[2], t[1], t[j + 1], a));
    }
}
