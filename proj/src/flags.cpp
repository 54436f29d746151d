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

#include "posflag/flags.hpp"

#include <algorithm>
#include <functional>

namespace posflag {

Flag::Flag(Matrix basis) : basis_(std::move(basis)) {
    if (!basis_.is_square() || basis_.rows() == 0) throw Error(Err::Schema, "flag basis must be a non-empty square matrix");
    if (det(basis_).is_zero()) throw Error(Err::SingularBasis, "flag basis is singular");
}

Flag Flag::ascending(size_t n, FieldKind k) { return Flag(Matrix::identity(n, k)); }

Flag Flag::descending(size_t n, FieldKind k) {
    Matrix m(n, n, k);
    for (size_t j = 0; j < n; ++j) m(n - 1 - j, j) = FieldElement::one(k);
    return Flag(std::move(m));
}

bool operator==(const Flag& a, const Flag& b) {
    if (a.n() != b.n()) return false;
    // Same flag iff b^-1 a is upper triangular.
    Matrix c = inverse(b.basis_) * a.basis_;
    for (size_t i = 0; i < c.rows(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (!c(i, j).is_zero()) return false;
    return true;
}

Flag flag_from_basis(const Matrix& m) { return Flag(m); }

Flag flag_from_partial(const Matrix& cols) {
    const size_t n = cols.rows();
    Matrix b = cols;
    for (size_t e = 0; e < n && b.cols() < n; ++e) {
        Matrix unit(n, 1, cols.kind());
        unit(e, 0) = FieldElement::one(cols.kind());
        Matrix cand = b.hcat(unit);
        if (rank(cand) == cand.cols()) b = cand;
    }
    return Flag(b);
}

bool is_transverse(const FlagTuple& tuple) {
    if (tuple.empty()) return true;
    const size_t n = tuple[0].n(), k = tuple.size();
    std::vector<size_t> parts(k, 0);
    std::function<bool(size_t, size_t)> rec = [&](size_t i, size_t left) -> bool {
        if (i + 1 == k) {
            parts[i] = left;
            std::vector<std::pair<const Flag*, size_t>> w;
            for (size_t j = 0; j < k; ++j) w.emplace_back(&tuple[j], parts[j]);
            return !wedge(w).is_zero();
        }
        for (size_t p = 0; p <= left; ++p) {
            parts[i] = p;
            if (!rec(i + 1, left - p)) return false;
        }
        return true;
    };
    return rec(0, n);
}

FieldElement wedge(const std::vector<std::pair<const Flag*, size_t>>& parts) {
    Matrix m;
    for (const auto& [f, p] : parts)
        if (p > 0) m = m.hcat(f->subspace(p));
    return det(m);
}

namespace {

FieldElement nonzero(FieldElement x) {
    if (x.is_zero()) throw Error(Err::NotTransverse, "a wedge of the tuple vanishes");
    return x;
}

}  // namespace

FieldElement triple_ratio(const Flag& E, const Flag& F, const Flag& G, int a, int b, int c) {
    const int n = static_cast<int>(E.n());
    if (a < 1 || b < 1 || c < 1 || a + b + c != n) throw Error(Err::IndexOutOfRange, "triple ratio indices must be positive and sum to n");
    auto w = [&](int p, int q, int r) {
        return nonzero(wedge({{&E, static_cast<size_t>(p)}, {&F, static_cast<size_t>(q)}, {&G, static_cast<size_t>(r)}}));
    };
    return (w(a + 1, b, c - 1) / w(a - 1, b, c + 1)) * (w(a, b - 1, c + 1) / w(a, b + 1, c - 1)) *
           (w(a - 1, b + 1, c) / w(a + 1, b - 1, c));
}

FieldElement double_ratio(const Flag& E, const Flag& F, const Flag& G, const Flag& H, int a) {
    const int n = static_cast<int>(E.n());
    if (a < 1 || a > n - 1) throw Error(Err::IndexOutOfRange, "double ratio index out of range");
    auto w = [&](int p, int q, const Flag& X) {
        return nonzero(wedge({{&E, static_cast<size_t>(p)}, {&F, static_cast<size_t>(q)}, {&X, 1}}));
    };
    return -(w(a, n - a - 1, G) / w(a, n - a - 1, H)) * (w(a - 1, n - a, H) / w(a - 1, n - a, G));
}

std::vector<std::array<int, 3>> abc_triples(size_t n) {
    std::vector<std::array<int, 3>> out;
    const int m = static_cast<int>(n);
    for (int a = 1; a <= m - 2; ++a)
        for (int b = 1; a + b <= m - 1; ++b) out.push_back({a, b, m - a - b});
    return out;
}

Flag act(const Matrix& g, const Flag& F) {
    if (!g.is_square() || g.rows() != F.n()) throw Error(Err::Schema, "group element has the wrong size");
    if (det(g).is_zero()) throw Error(Err::SingularGroupElement, "group element is singular");
    return Flag(g * F.basis());
}

namespace {

EigenData positive_lift_eigen(const Matrix& m) {
    const FieldElement d = det(m);
    const Matrix lift = (d == FieldElement::one(m.kind()) && is_positively_hyperbolic(m, false)) ? m : -m;
    if (!is_positively_hyperbolic(m, true)) throw Error(Err::NotPositivelyHyperbolic, "no lift has distinct positive eigenvalues");
    return eigen_in_field(lift);
}

}  // namespace

Flag stable_flag(const Matrix& m) { return Flag(Matrix::from_columns(positive_lift_eigen(m).eigenvectors)); }

Flag unstable_flag(const Matrix& m) {
    auto ev = positive_lift_eigen(m).eigenvectors;
    std::reverse(ev.begin(), ev.end());
    return Flag(Matrix::from_columns(ev));
}

std::vector<Matrix> flag_maps(const std::vector<std::pair<const Flag*, const Flag*>>& pairs) {
    if (pairs.empty()) throw Error(Err::Schema, "no flag pairs");
    const size_t n = pairs[0].first->n();
    const FieldKind k = pairs[0].first->kind();
    std::vector<Vector> rows;
    for (const auto& [E, F] : pairs) {
        const Matrix Finv = inverse(F->basis());
        const Matrix& B = E->basis();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < i; ++j) {
                Vector r(n * n, FieldElement::zero(k));
                for (size_t p = 0; p < n; ++p)
                    for (size_t l = 0; l < n; ++l) r[p * n + l] = Finv(i, p) * B(l, j);
                rows.push_back(std::move(r));
            }
    }
    std::vector<Matrix> out;
    if (rows.empty()) {
        for (size_t p = 0; p < n * n; ++p) {
            Matrix g(n, n, k);
            g(p / n, p % n) = FieldElement::one(k);
            out.push_back(g);
        }
        return out;
    }
    for (const auto& v : kernel(Matrix::from_rows(rows))) {
        Matrix g(n, n, k);
        for (size_t p = 0; p < n * n; ++p) g(p / n, p % n) = v[p];
        out.push_back(std::move(g));
    }
    return out;
}

bool stabilizer_is_trivial(const Flag& E, const Flag& F, const Flag& G) {
    if (!is_transverse({E, F, G})) throw Error(Err::NotTransverse, "triple is not transverse");
    // The identity always solves the system, so dimension one means scalars only.
    return flag_maps({{&E, &E}, {&F, &F}, {&G, &G}}).size() == 1;
}

}  // namespace posflag
