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

#ifndef POSFLAG_FLAGS_HPP
#define POSFLAG_FLAGS_HPP

#include <array>
#include <utility>
#include <vector>

#include "posflag/exact_linalg.hpp"

namespace posflag {

// Full flag: F^(a) is the span of the first a basis columns.
class Flag {
public:
    explicit Flag(Matrix basis);

    size_t n() const { return basis_.rows(); }
    FieldKind kind() const { return basis_.kind(); }
    const Matrix& basis() const { return basis_; }
    Matrix subspace(size_t a) const { return basis_.leading_columns(a); }
    Vector line() const { return basis_.column(0); }

    static Flag ascending(size_t n, FieldKind k);
    static Flag descending(size_t n, FieldKind k);

    // Subspace-wise equality.
    friend bool operator==(const Flag& a, const Flag& b);
    friend bool operator!=(const Flag& a, const Flag& b) { return !(a == b); }

private:
    Matrix basis_;
};

using FlagTuple = std::vector<Flag>;

Flag flag_from_basis(const Matrix& m);

// Completes independent columns to a flag basis with standard vectors.
Flag flag_from_partial(const Matrix& cols);

// Every composition a_1 + ... + a_k = n spans.
bool is_transverse(const FlagTuple& tuple);

// det of the first p_i columns of each listed flag, concatenated.
FieldElement wedge(const std::vector<std::pair<const Flag*, size_t>>& parts);

FieldElement triple_ratio(const Flag& E, const Flag& F, const Flag& G, int a, int b, int c);
FieldElement double_ratio(const Flag& E, const Flag& F, const Flag& G, const Flag& H, int a);

// (a, b, c) with a, b, c >= 1 and a + b + c = n, lexicographic.
std::vector<std::array<int, 3>> abc_triples(size_t n);

Flag act(const Matrix& g, const Flag& F);

// Eigenvector flags of the lift with positive spectrum.
Flag stable_flag(const Matrix& m);
Flag unstable_flag(const Matrix& m);

// Basis of {g : g E_i = F_i as flags} as n x n matrices.
std::vector<Matrix> flag_maps(const std::vector<std::pair<const Flag*, const Flag*>>& pairs);

bool stabilizer_is_trivial(const Flag& E, const Flag& F, const Flag& G);

}  // namespace posflag

#endif
