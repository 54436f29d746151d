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

#include "posflag/exact_linalg.hpp"

#include <algorithm>
#include <functional>

namespace posflag {

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(size_t rows, size_t cols, FieldKind k)
    : rows_(rows), cols_(cols), kind_(k), a_(rows * cols, FieldElement::zero(k)) {}

Matrix Matrix::identity(size_t n, FieldKind k) {
    Matrix m(n, n, k);
    for (size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(k);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty() || rows[0].empty()) throw Error(Err::Schema, "empty matrix");
    Matrix m(rows.size(), rows[0].size(), rows[0][0].kind());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error(Err::Schema, "ragged matrix rows");
        for (size_t j = 0; j < m.cols_; ++j) {
            if (rows[i][j].kind() != m.kind_) throw Error(Err::MixedFieldTags, "matrix entries carry different tags");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) { return from_rows(cols).transpose(); }

Matrix Matrix::diagonal(const Vector& d) {
    if (d.empty()) throw Error(Err::Schema, "empty diagonal");
    Matrix m(d.size(), d.size(), d[0].kind());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Vector Matrix::column(size_t j) const {
    Vector v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector Matrix::row(size_t i) const { return Vector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Matrix Matrix::leading_columns(size_t k) const {
    Matrix m(rows_, k, kind_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
    return m;
}

Matrix Matrix::submatrix(const Index& I, const Index& J) const {
    Matrix m(I.size(), J.size(), kind_);
    for (size_t i = 0; i < I.size(); ++i) {
        if (I[i] >= rows_) throw Error(Err::IndexOutOfRange, "row index out of range");
        for (size_t j = 0; j < J.size(); ++j) {
            if (J[j] >= cols_) throw Error(Err::IndexOutOfRange, "column index out of range");
            m(i, j) = (*this)(I[i], J[j]);
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, kind_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::hcat(const Matrix& o) const {
    if (cols_ == 0) return o;
    if (o.cols_ == 0) return *this;
    Matrix m(rows_, cols_ + o.cols_, kind_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
    }
    return m;
}

Matrix Matrix::vcat(const Matrix& o) const { return transpose().hcat(o.transpose()).transpose(); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Err::Schema, "matrix shape mismatch in product");
    Matrix m(a.rows_, b.cols_, a.kind_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const FieldElement& x = a(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
        }
    return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw Error(Err::Schema, "matrix-vector shape mismatch");
    Vector r(a.rows_, FieldElement::zero(a.kind_));
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Err::Schema, "matrix shape mismatch in sum");
    Matrix m = a;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const FieldElement& s, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.a_) x = s * x;
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::eval(const mpq_class& t) const {
    Matrix m(rows_, cols_, FieldKind::rational);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = FieldElement(a_[i].eval(t));
    return m;
}

// ---------------------------------------------------------------- elimination

FieldElement det(const Matrix& m) {
    if (!m.is_square()) throw Error(Err::Schema, "determinant of a non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return FieldElement::one(m.kind());
    // Bareiss: every division below is exact in the fraction-free sense.
    Matrix a = m;
    FieldElement prev = FieldElement::one(m.kind());
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return FieldElement::zero(m.kind());
        if (p != k) {
            for (size_t j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

FieldElement minor(const Matrix& m, const Index& I, const Index& J) {
    if (I.size() != J.size()) throw Error(Err::IndexOutOfRange, "minor index sets differ in size");
    for (size_t i = 1; i < I.size(); ++i)
        if (I[i] <= I[i - 1] || J[i] <= J[i - 1]) throw Error(Err::IndexOutOfRange, "minor indices not increasing");
    return det(m.submatrix(I, J));
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
Index rref(Matrix& a) {
    Index pivots;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        FieldElement inv = a(r, c).inv();
        for (size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            FieldElement f = a(i, c);
            for (size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t rank(const Matrix& m) {
    Matrix a = m;
    return rref(a).size();
}

std::vector<Vector> kernel(const Matrix& m) {
    Matrix a = m;
    Index piv = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : piv) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols(), FieldElement::zero(m.kind()));
        v[f] = FieldElement::one(m.kind());
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw Error(Err::Schema, "inverse of a non-square matrix");
    const size_t n = m.rows();
    Matrix a = m.hcat(Matrix::identity(n, m.kind()));
    Index piv = rref(a);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error(Err::DivisionByZero, "matrix is singular");
    Matrix r(n, n, m.kind());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r(i, j) = a(i, n + j);
    return r;
}

FieldElement trace(const Matrix& m) {
    FieldElement s = FieldElement::zero(m.kind());
    for (size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) s += m(i, i);
    return s;
}

std::vector<Index> subsets(size_t n, size_t k) {
    std::vector<Index> out;
    Index cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(Vector coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const FieldElement& c) { return UPoly(Vector{c}); }

UPoly UPoly::linear_root(const FieldElement& r) { return UPoly(Vector{-r, r.one_like()}); }

FieldElement UPoly::coeff(size_t i) const {
    if (i < c_.size()) return c_[i];
    if (c_.empty()) throw Error(Err::ZeroPolynomial, "coefficient of zero polynomial has no field tag");
    return c_[0].zero_like();
}

FieldElement UPoly::eval(const FieldElement& x) const {
    FieldElement r = x.zero_like();
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    Vector d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = FieldElement::from_int(static_cast<long>(i), c_[i].kind()) * c_[i];
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    FieldElement inv = lc().inv();
    Vector d = c_;
    for (auto& x : d) x *= inv;
    return UPoly(std::move(d));
}

int UPoly::sign_at_infinity(int dir) const {
    if (is_zero()) return 0;
    int s = lc().sign();
    return (dir < 0 && degree() % 2 == 1) ? -s : s;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    const UPoly& big = a.c_.size() >= b.c_.size() ? a : b;
    const UPoly& small = a.c_.size() >= b.c_.size() ? b : a;
    Vector r = big.c_;
    for (size_t i = 0; i < small.c_.size(); ++i) r[i] += small.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    Vector r(a.c_.size() + b.c_.size() - 1, a.c_[0].zero_like());
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw Error(Err::DivisionByZero, "polynomial division by zero");
    if (degree() < d.degree()) return {UPoly(), *this};
    Vector rem = c_;
    const size_t dn = d.c_.size();
    Vector q(c_.size() - dn + 1, d.c_[0].zero_like());
    FieldElement inv = d.lc().inv();
    for (size_t k = q.size(); k-- > 0;) {
        FieldElement qk = rem[k + dn - 1] * inv;
        if (qk.is_zero()) continue;
        for (size_t j = 0; j < dn; ++j) rem[k + j] -= qk * d.c_[j];
        q[k] = qk;
    }
    rem.resize(dn - 1, d.c_[0].zero_like());
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a0, const UPoly& b0) {
    UPoly a = a0, b = b0;
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly char_poly(const Matrix& m) {
    if (!m.is_square()) throw Error(Err::Schema, "characteristic polynomial of a non-square matrix");
    const size_t n = m.rows();
    const FieldKind k = m.kind();
    // Faddeev-LeVerrier
    Vector c(n + 1, FieldElement::zero(k));
    c[n] = FieldElement::one(k);
    Matrix mk(n, n, k);
    const Matrix id = Matrix::identity(n, k);
    for (size_t i = 1; i <= n; ++i) {
        mk = m * mk + c[n - i + 1] * id;
        c[n - i] = -trace(m * mk) / FieldElement::from_int(static_cast<long>(i), k);
    }
    return UPoly(std::move(c));
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
    if (p.is_zero()) throw Error(Err::ZeroPolynomial, "Sturm chain of zero");
    std::vector<UPoly> chain{p};
    UPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    for (;;) {
        UPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

size_t sign_changes(const std::vector<int>& signs) {
    size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

size_t variations(const std::vector<UPoly>& chain, const Endpoint& x, int dir_if_inf) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& q : chain) s.push_back(x ? q.eval(*x).sign() : q.sign_at_infinity(dir_if_inf));
    return sign_changes(s);
}

}  // namespace

bool is_square_free(const UPoly& p) {
    if (p.is_zero()) throw Error(Err::ZeroPolynomial, "square-freeness of zero");
    return gcd(p, p.derivative()).degree() == 0;
}

size_t count_roots(const UPoly& p, const Endpoint& lo, const Endpoint& hi) {
    if (p.is_zero()) throw Error(Err::ZeroPolynomial, "root count of zero polynomial");
    if (lo && hi && *hi <= *lo) return 0;
    UPoly s = p;
    if (s.degree() > 0) s = s.divmod(gcd(s, s.derivative())).first;
    // Roots at the endpoints lie outside the open interval.
    for (const Endpoint* e : {&lo, &hi}) {
        if (*e && s.degree() > 0 && s.eval(**e).is_zero()) s = s.divmod(UPoly::linear_root(**e)).first;
    }
    if (s.degree() <= 0) return 0;
    auto chain = sturm_chain(s);
    return variations(chain, lo, -1) - variations(chain, hi, 1);
}

bool is_positively_hyperbolic(const Matrix& m, bool projective) {
    if (!m.is_square()) throw Error(Err::Schema, "non-square matrix");
    const FieldElement d = det(m);
    const FieldElement one = FieldElement::one(m.kind());
    if (!(d == one || (projective && d == -one)))
        throw Error(Err::DeterminantNotUnit, projective ? "determinant is not +1 or -1" : "determinant is not 1");
    const FieldElement zero = FieldElement::zero(m.kind());
    auto test = [&](const Matrix& a) {
        UPoly p = char_poly(a);
        return is_square_free(p) && count_roots(p, zero, std::nullopt) == a.rows();
    };
    if (test(m)) return true;
    return projective && test(-m);
}

// ---------------------------------------------------------------- roots

namespace {

// Distinct rational roots of a square-free rational polynomial, descending.
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& p) {
    const size_t n = p.size() - 1;
    mpz_class L = 1;
    for (const auto& c : p) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> a(n + 1);
    for (size_t i = 0; i <= n; ++i) a[i] = mpq_class(p[i] * L).get_num();
    // Monic integer transform: q(y) = a_n^(n-1) p(y / a_n); roots of q are a_n * roots of p.
    std::vector<mpz_class> q(n + 1);
    q[n] = 1;
    mpz_class pw = 1;
    for (size_t i = n; i-- > 0;) {
        q[i] = a[i] * pw;
        pw *= a[n];
    }
    Vector qc;
    for (const auto& x : q) qc.emplace_back(mpq_class(x));
    UPoly qp(qc);
    mpz_class B = 0;
    for (size_t i = 0; i < n; ++i)
        if (abs(q[i]) > B) B = abs(q[i]);
    B += 1;
    auto chain = sturm_chain(qp);
    auto V = [&](const mpq_class& x) { return variations(chain, FieldElement(x), 0); };
    // Rational roots of q are integers, so half-integer endpoints are never roots.
    std::vector<mpz_class> found;
    const mpq_class half(1, 2);
    std::function<void(const mpq_class&, const mpq_class&, size_t, size_t)> search =
        [&](const mpq_class& lo, const mpq_class& hi, size_t vlo, size_t vhi) {
            if (vlo == vhi) return;
            mpq_class w = hi - lo;
            if (w == 1) {
                mpq_class z = lo + half;
                if (qp.eval(FieldElement(z)).is_zero()) found.push_back(z.get_num());
                return;
            }
            mpz_class h = w.get_num() / 2;
            mpq_class mid = lo + mpq_class(h);
            size_t vm = V(mid);
            search(lo, mid, vlo, vm);
            search(mid, hi, vm, vhi);
        };
    mpq_class lo = mpq_class(-B) - half, hi = mpq_class(B) + half;
    search(lo, hi, V(lo), V(hi));
    std::vector<mpq_class> roots;
    for (const auto& z : found) {
        mpq_class r(z, a[n]);
        r.canonicalize();
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), [](const mpq_class& x, const mpq_class& y) { return x > y; });
    return roots;
}

long height(const FieldElement& x) {
    if (x.is_rational()) return 0;
    return std::max(x.ratfunc().num().degree(), x.ratfunc().den().degree());
}

// Rational function through the points (t_j, v_j) with numerator and
// denominator degree at most d; nullopt when the system has no usable solution.
std::optional<RatFunc> interpolate(const std::vector<mpq_class>& ts, const std::vector<mpq_class>& vs, size_t d) {
    const size_t m = ts.size();
    Matrix sys(m, 2 * (d + 1), FieldKind::rational);
    for (size_t j = 0; j < m; ++j) {
        mpq_class pw = 1;
        for (size_t k = 0; k <= d; ++k) {
            sys(j, k) = FieldElement(pw);
            sys(j, d + 1 + k) = FieldElement(mpq_class(-vs[j] * pw));
            pw *= ts[j];
        }
    }
    auto ker = kernel(sys);
    if (ker.empty()) return std::nullopt;
    const Vector& v = ker[0];
    mpz_class L = 1;
    for (const auto& x : v) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.rational().get_den_mpz_t());
    std::vector<mpz_class> num(d + 1), den(d + 1);
    for (size_t k = 0; k <= d; ++k) {
        num[k] = mpq_class(v[k].rational() * L).get_num();
        den[k] = mpq_class(v[d + 1 + k].rational() * L).get_num();
    }
    ZPoly D(den);
    if (D.is_zero()) return std::nullopt;
    return RatFunc(ZPoly(num), D);
}

Vector ratfunc_roots(const UPoly& p) {
    const size_t n = static_cast<size_t>(p.degree());
    // Past this bound no coefficient has a pole and the roots never collide,
    // so sorting specialized roots tracks each root function.
    mpq_class B = 1;
    auto bump = [&](const FieldElement& x) {
        if (x.is_zero()) return;
        mpq_class b = stability_bound(x.ratfunc());
        if (b > B) B = b;
    };
    for (const auto& c : p.coeffs()) bump(c);
    bump(discriminant_resultant(p));
    long budget = 1;
    for (const auto& c : p.coeffs()) budget += height(c);
    const size_t maxd = static_cast<size_t>(budget);
    const size_t npts = 2 * maxd + 3;
    mpz_class t0 = B.get_num() / B.get_den() + 1;
    std::vector<mpq_class> ts;
    std::vector<std::vector<mpq_class>> roots_at;
    for (size_t j = 0; j < npts; ++j) {
        mpq_class tj(t0 + static_cast<long>(j));
        std::vector<mpq_class> pc;
        for (const auto& c : p.coeffs()) pc.push_back(c.eval(tj));
        auto r = rational_roots(pc);
        if (r.size() != n) throw Error(Err::SpectrumNotInField, "a specialization has irrational roots");
        ts.push_back(tj);
        roots_at.push_back(std::move(r));
    }
    Vector out;
    for (size_t i = 0; i < n; ++i) {
        std::optional<FieldElement> root;
        for (size_t d = 0; d <= maxd && !root; ++d) {
            const size_t m = 2 * d + 3;
            std::vector<mpq_class> tsub(ts.begin(), ts.begin() + static_cast<long>(m)), vs;
            for (size_t j = 0; j < m; ++j) vs.push_back(roots_at[j][i]);
            auto f = interpolate(tsub, vs, d);
            if (f && p.eval(FieldElement(*f)).is_zero()) root = FieldElement(*f);
        }
        if (!root) throw Error(Err::SpectrumNotInField, "no rational-function root found within the degree budget");
        out.push_back(*root);
    }
    std::sort(out.begin(), out.end(), [](const FieldElement& x, const FieldElement& y) { return x > y; });
    return out;
}

}  // namespace

FieldElement discriminant_resultant(const UPoly& p) {
    const UPoly q = p.derivative();
    const long m = p.degree(), k = q.degree();
    if (m < 1) throw Error(Err::ZeroPolynomial, "discriminant of a constant");
    if (k < 1) return p.lc() * q.lc();
    const size_t s = static_cast<size_t>(m + k);
    const FieldKind kind = p.lc().kind();
    Matrix syl(s, s, kind);
    for (size_t r = 0; r < static_cast<size_t>(k); ++r)
        for (long i = 0; i <= m; ++i) syl(r, r + static_cast<size_t>(i)) = p.coeff(static_cast<size_t>(m - i));
    for (size_t r = 0; r < static_cast<size_t>(m); ++r)
        for (long i = 0; i <= k; ++i)
            syl(static_cast<size_t>(k) + r, r + static_cast<size_t>(i)) = q.coeff(static_cast<size_t>(k - i));
    return det(syl);
}

Vector roots_in_field(const UPoly& p) {
    if (p.is_zero()) throw Error(Err::ZeroPolynomial, "roots of zero polynomial");
    if (p.degree() == 0) return {};
    if (!is_square_free(p)) throw Error(Err::RepeatedEigenvalue, "polynomial has a repeated root");
    bool all_const = true;
    for (const auto& c : p.coeffs())
        if (!c.is_rational() && !c.ratfunc().is_constant()) all_const = false;
    if (all_const) {
        std::vector<mpq_class> pc;
        for (const auto& c : p.coeffs()) pc.push_back(c.eval(0));
        auto r = rational_roots(pc);
        if (r.size() != static_cast<size_t>(p.degree()))
            throw Error(Err::SpectrumNotInField, "polynomial does not split over Q");
        Vector out;
        for (const auto& x : r) out.push_back(FieldElement::from_rational(x, p.lc().kind()));
        return out;
    }
    return ratfunc_roots(p);
}

EigenData eigen_in_field(const Matrix& m) {
    if (!m.is_square()) throw Error(Err::Schema, "non-square matrix");
    EigenData ed;
    ed.eigenvalues = roots_in_field(char_poly(m));
    const size_t n = m.rows();
    const Matrix id = Matrix::identity(n, m.kind());
    for (const auto& lam : ed.eigenvalues) {
        auto ker = kernel(m - lam * id);
        if (ker.size() != 1) throw Error(Err::RepeatedEigenvalue, "eigenspace is not a line");
        Vector v = ker[0];
        size_t j = 0;
        while (v[j].is_zero()) ++j;
        FieldElement inv = v[j].inv();
        for (auto& x : v) x *= inv;
        ed.eigenvectors.push_back(std::move(v));
    }
    return ed;
}

}  // namespace posflag
