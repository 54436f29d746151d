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

/*
   Positive tuples of flags over ideal triangulations of a polygon, and
   total positivity of matrices.

   Polygon vertices are 1..k in clockwise order. A diagonal [p, m] runs from
   e+ = p to e- = m; e^r is the third vertex of the adjacent triangle on the
   clockwise arc from e+ to e-, e^l the one on the arc from e- back to e+.
   Triangles are listed by ascending vertex tuple and the preferred vertices
   follow that order.
*/

#ifndef POSFLAG_POSITIVITY_HPP
#define POSFLAG_POSITIVITY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "posflag/flags.hpp"

namespace posflag {

struct IdealTriangulation {
    size_t k = 0;
    std::vector<std::array<size_t, 2>> diagonals;  // 1-based (e+, e-)
    std::vector<size_t> preferred;                 // 1-based, one per triangle

    // Throws TriangulationMismatch on inconsistent data.
    void validate() const;
    // Ascending vertex triples, 1-based.
    std::vector<std::array<size_t, 3>> triangles() const;
    // Clockwise (v_t, x_t', x_t'') for triangle i.
    std::array<size_t, 3> oriented_triangle(size_t i) const;
    // (e+, e^r, e-, e^l) for diagonal i.
    std::array<size_t, 4> diagonal_quad(size_t i) const;

    // Fan from vertex 1 with diagonals [1, j] and preferred vertex 1.
    static IdealTriangulation fan(size_t k);
    // Every triangulation of the k-gon with preferred vertex the smallest vertex.
    static std::vector<IdealTriangulation> all(size_t k);
};

struct PositivityCoordinates {
    size_t n = 0;
    std::vector<Vector> T;  // per triangle, in abc_triples(n) order
    std::vector<Vector> D;  // per diagonal, a = 1..n-1

    // Keys "T/t/a,b,c" and "D/e/a", 0-based object indices.
    std::map<std::string, FieldElement> keyed() const;
    static PositivityCoordinates from_keyed(const std::map<std::string, FieldElement>& m, const IdealTriangulation& tri,
                                            size_t n);
    bool all_positive() const;
    friend bool operator==(const PositivityCoordinates& a, const PositivityCoordinates& b) {
        return a.n == b.n && a.T == b.T && a.D == b.D;
    }
};

PositivityCoordinates phi(const IdealTriangulation& tri, const FlagTuple& tuple);
bool is_positive_tuple(const FlagTuple& tuple, const IdealTriangulation& tri);
// Positivity with respect to the fan triangulation.
bool is_positive_tuple(const FlagTuple& tuple);

bool is_totally_positive(const Matrix& m);

enum class Side { upper, lower };
bool is_tp_unipotent(const Matrix& m, Side side);
Matrix generate_tp_unipotent(size_t n, const Vector& params, Side side);

struct TPWitness {
    Matrix basis;
    Matrix u;
    std::vector<Matrix> v_list;
};

TPWitness normal_form(const FlagTuple& tuple);
// F1 = B asc, F2 = B u asc, F3 = B desc, F_i = B v1^-1 ... v_{i-3}^-1 desc.
FlagTuple tuple_from_witness(const TPWitness& w);

FlagTuple reconstruct_tuple(const IdealTriangulation& tri, const PositivityCoordinates& coords, size_t n);

bool check_monotonicity(const FlagTuple& tuple);

}  // namespace posflag

#endif
