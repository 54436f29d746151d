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

#ifndef POSFLAG_EXACT_LINALG_HPP
#define POSFLAG_EXACT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "posflag/ordered_field.hpp"

namespace posflag {

using Vector = std::vector<FieldElement>;
using Index = std::vector<size_t>;

// Dense row-major matrix. Rectangular shapes are used internally; the public
// operations that need a square input check for it.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, FieldKind k);
    static Matrix identity(size_t n, FieldKind k);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(const std::vector<Vector>& cols);
    static Matrix diagonal(const Vector& d);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    FieldKind kind() const { return kind_; }

    FieldElement& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const FieldElement& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vector column(size_t j) const;
    Vector row(size_t i) const;
    // First k columns.
    Matrix leading_columns(size_t k) const;
    Matrix submatrix(const Index& I, const Index& J) const;
    Matrix transpose() const;
    Matrix hcat(const Matrix& o) const;
    Matrix vcat(const Matrix& o) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const FieldElement& s, const Matrix& a);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Specializes t entrywise.
    Matrix eval(const mpq_class& t) const;

private:
    size_t rows_ = 0, cols_ = 0;
    FieldKind kind_ = FieldKind::rational;
    std::vector<FieldElement> a_;
};

FieldElement det(const Matrix& m);
// 0-based, strictly increasing index sets of equal size.
FieldElement minor(const Matrix& m, const Index& I, const Index& J);
size_t rank(const Matrix& m);
// Basis of the right kernel.
std::vector<Vector> kernel(const Matrix& m);
Matrix inverse(const Matrix& m);
FieldElement trace(const Matrix& m);

// All k-subsets of {0..n-1}, lexicographic.
std::vector<Index> subsets(size_t n, size_t k);

// Dense univariate polynomial over the active field, ascending coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Vector coeffs);
    static UPoly constant(const FieldElement& c);
    // x - r
    static UPoly linear_root(const FieldElement& r);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const FieldElement& lc() const { return c_.back(); }
    const Vector& coeffs() const { return c_; }
    FieldElement coeff(size_t i) const;

    FieldElement eval(const FieldElement& x) const;
    UPoly derivative() const;
    UPoly monic() const;
    // Sign as x -> +inf (dir = 1) or x -> -inf (dir = -1).
    int sign_at_infinity(int dir) const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const;
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    // Euclidean division; quotient and remainder.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

private:
    void trim();
    Vector c_;
};

// Monic gcd.
UPoly gcd(const UPoly& a, const UPoly& b);

// det(x Id - M), monic.
UPoly char_poly(const Matrix& m);

std::vector<UPoly> sturm_chain(const UPoly& p);

// Endpoint of an open interval; nullopt stands for -inf (lower) or +inf (upper).
using Endpoint = std::optional<FieldElement>;

// Distinct roots of p in (lo, hi) within the real closure of the active field.
size_t count_roots(const UPoly& p, const Endpoint& lo, const Endpoint& hi);

bool is_square_free(const UPoly& p);

bool is_positively_hyperbolic(const Matrix& m, bool projective);

struct EigenData {
    Vector eigenvalues;                // strictly decreasing
    std::vector<Vector> eigenvectors;  // first nonzero entry is 1
};

// Roots of p in the active field, strictly decreasing. Throws
// SpectrumNotInField when p does not split, RepeatedEigenvalue when it is not
// square-free.
Vector roots_in_field(const UPoly& p);

EigenData eigen_in_field(const Matrix& m);

// Resultant of p and p' via the Sylvester determinant.
FieldElement discriminant_resultant(const UPoly& p);

}  // namespace posflag

#endif
