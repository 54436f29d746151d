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

#include "posflag/positivity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>

namespace posflag {

// ---------------------------------------------------------------- triangulations

namespace {

bool adjacent(size_t p, size_t m, size_t k) {
    size_t d = p > m ? p - m : m - p;
    return d == 1 || d == k - 1;
}

// x lies strictly inside the clockwise arc from p to m.
bool in_arc(size_t p, size_t m, size_t x, size_t k) {
    size_t dx = (x + k - p) % k, dm = (m + k - p) % k;
    return dx > 0 && dx < dm;
}

}  // namespace

void IdealTriangulation::validate() const {
    if (k < 3) throw Error(Err::TriangulationMismatch, "a polygon needs at least three vertices");
    if (diagonals.size() != k - 3) throw Error(Err::TriangulationMismatch, "expected k - 3 diagonals");
    std::set<std::pair<size_t, size_t>> seen;
    for (const auto& d : diagonals) {
        if (d[0] < 1 || d[0] > k || d[1] < 1 || d[1] > k || d[0] == d[1] || adjacent(d[0], d[1], k))
            throw Error(Err::TriangulationMismatch, "diagonal does not join two non-adjacent vertices");
        if (!seen.insert({std::min(d[0], d[1]), std::max(d[0], d[1])}).second)
            throw Error(Err::TriangulationMismatch, "repeated diagonal");
    }
    for (auto i = seen.begin(); i != seen.end(); ++i)
        for (auto j = std::next(i); j != seen.end(); ++j) {
            auto [a, b] = *i;
            auto [c, d] = *j;
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                throw Error(Err::TriangulationMismatch, "diagonals cross");
        }
    auto tris = triangles();
    if (tris.size() != k - 2) throw Error(Err::TriangulationMismatch, "diagonals do not cut k - 2 triangles");
    if (preferred.size() != k - 2) throw Error(Err::TriangulationMismatch, "expected one preferred vertex per triangle");
    for (size_t i = 0; i < tris.size(); ++i)
        if (std::find(tris[i].begin(), tris[i].end(), preferred[i]) == tris[i].end())
            throw Error(Err::TriangulationMismatch, "preferred vertex is not a vertex of its triangle");
}

std::vector<std::array<size_t, 3>> IdealTriangulation::triangles() const {
    std::set<std::pair<size_t, size_t>> edges;
    for (size_t i = 1; i <= k; ++i) edges.insert({std::min(i, i % k + 1), std::max(i, i % k + 1)});
    for (const auto& d : diagonals) edges.insert({std::min(d[0], d[1]), std::max(d[0], d[1])});
    std::vector<std::array<size_t, 3>> out;
    for (size_t a = 1; a <= k; ++a)
        for (size_t b = a + 1; b <= k; ++b) {
            if (!edges.count({a, b})) continue;
            for (size_t c = b + 1; c <= k; ++c)
                if (edges.count({b, c}) && edges.count({a, c})) out.push_back({a, b, c});
        }
    return out;
}

std::array<size_t, 3> IdealTriangulation::oriented_triangle(size_t i) const {
    auto t = triangles().at(i);
    while (t[0] != preferred.at(i)) std::rotate(t.begin(), t.begin() + 1, t.end());
    return t;
}

std::array<size_t, 4> IdealTriangulation::diagonal_quad(size_t i) const {
    const size_t p = diagonals.at(i)[0], m = diagonals.at(i)[1];
    std::optional<size_t> r, l;
    for (const auto& t : triangles()) {
        if (std::find(t.begin(), t.end(), p) == t.end() || std::find(t.begin(), t.end(), m) == t.end()) continue;
        for (size_t x : t)
            if (x != p && x != m) (in_arc(p, m, x, k) ? r : l) = x;
    }
    if (!r || !l) throw Error(Err::TriangulationMismatch, "diagonal does not separate two triangles");
    return {p, *r, m, *l};
}

IdealTriangulation IdealTriangulation::fan(size_t k) {
    IdealTriangulation t;
    t.k = k;
    for (size_t j = 3; j < k; ++j) t.diagonals.push_back({1, j});
    t.preferred.assign(k >= 2 ? k - 2 : 0, 1);
    return t;
}

std::vector<IdealTriangulation> IdealTriangulation::all(size_t k) {
    using Diags = std::vector<std::array<size_t, 2>>;
    // Triangulations of the sub-polygon lo..hi; the edge (lo, hi) is given.
    std::function<std::vector<Diags>(size_t, size_t)> rec = [&](size_t lo, size_t hi) -> std::vector<Diags> {
        if (hi - lo < 2) return {Diags{}};
        std::vector<Diags> out;
        for (size_t m = lo + 1; m < hi; ++m)
            for (const auto& left : rec(lo, m))
                for (const auto& right : rec(m, hi)) {
                    Diags d = left;
                    d.insert(d.end(), right.begin(), right.end());
                    if (m - lo > 1) d.push_back({lo, m});
                    if (hi - m > 1) d.push_back({m, hi});
                    out.push_back(std::move(d));
                }
        return out;
    };
    std::vector<IdealTriangulation> out;
    for (auto& d : rec(1, k)) {
        IdealTriangulation t;
        t.k = k;
        std::sort(d.begin(), d.end());
        t.diagonals = std::move(d);
        for (const auto& tri : t.triangles()) t.preferred.push_back(tri[0]);
        out.push_back(std::move(t));
    }
    return out;
}

// ---------------------------------------------------------------- coordinates

std::map<std::string, FieldElement> PositivityCoordinates::keyed() const {
    std::map<std::string, FieldElement> m;
    const auto abc = abc_triples(n);
    for (size_t t = 0; t < T.size(); ++t)
        for (size_t i = 0; i < abc.size(); ++i)
            m.emplace("T/" + std::to_string(t) + "/" + std::to_string(abc[i][0]) + "," + std::to_string(abc[i][1]) + "," +
                          std::to_string(abc[i][2]),
                      T[t][i]);
    for (size_t e = 0; e < D.size(); ++e)
        for (size_t a = 1; a < n; ++a) m.emplace("D/" + std::to_string(e) + "/" + std::to_string(a), D[e][a - 1]);
    return m;
}

PositivityCoordinates PositivityCoordinates::from_keyed(const std::map<std::string, FieldElement>& m,
                                                        const IdealTriangulation& tri, size_t n) {
    PositivityCoordinates c;
    c.n = n;
    c.T.assign(tri.k - 2, Vector(abc_triples(n).size()));
    c.D.assign(tri.k - 3, Vector(n - 1));
    PositivityCoordinates probe = c;
    auto keys = probe.keyed();
    if (keys.size() != m.size()) throw Error(Err::SchemaMismatch, "coordinate count does not match the triangulation");
    const auto abc = abc_triples(n);
    for (size_t t = 0; t < c.T.size(); ++t)
        for (size_t i = 0; i < abc.size(); ++i) {
            auto it = m.find("T/" + std::to_string(t) + "/" + std::to_string(abc[i][0]) + "," +
                             std::to_string(abc[i][1]) + "," + std::to_string(abc[i][2]));
            if (it == m.end()) throw Error(Err::SchemaMismatch, "missing triangle coordinate");
            c.T[t][i] = it->second;
        }
    for (size_t e = 0; e < c.D.size(); ++e)
        for (size_t a = 1; a < n; ++a) {
            auto it = m.find("D/" + std::to_string(e) + "/" + std::to_string(a));
            if (it == m.end()) throw Error(Err::SchemaMismatch, "missing diagonal coordinate");
            c.D[e][a - 1] = it->second;
        }
    return c;
}

bool PositivityCoordinates::all_positive() const {
    for (const auto& v : T)
        for (const auto& x : v)
            if (x.sign() <= 0) return false;
    for (const auto& v : D)
        for (const auto& x : v)
            if (x.sign() <= 0) return false;
    return true;
}

PositivityCoordinates phi(const IdealTriangulation& tri, const FlagTuple& tuple) {
    tri.validate();
    if (tuple.size() != tri.k) throw Error(Err::TriangulationMismatch, "tuple length differs from the polygon size");
    PositivityCoordinates c;
    c.n = tuple[0].n();
    const auto abc = abc_triples(c.n);
    for (size_t t = 0; t < tri.k - 2; ++t) {
        auto o = tri.oriented_triangle(t);
        Vector v;
        for (const auto& [a, b, cc] : abc) v.push_back(triple_ratio(tuple[o[0] - 1], tuple[o[1] - 1], tuple[o[2] - 1], a, b, cc));
        c.T.push_back(std::move(v));
    }
    for (size_t e = 0; e < tri.diagonals.size(); ++e) {
        auto [p, r, m, l] = tri.diagonal_quad(e);
        Vector v;
        for (size_t a = 1; a < c.n; ++a)
            v.push_back(double_ratio(tuple[p - 1], tuple[m - 1], tuple[r - 1], tuple[l - 1], static_cast<int>(a)));
        c.D.push_back(std::move(v));
    }
    return c;
}

bool is_positive_tuple(const FlagTuple& tuple, const IdealTriangulation& tri) {
    if (!is_transverse(tuple)) return false;
    return phi(tri, tuple).all_positive();
}

bool is_positive_tuple(const FlagTuple& tuple) { return is_positive_tuple(tuple, IdealTriangulation::fan(tuple.size())); }

// ---------------------------------------------------------------- total positivity

namespace {

void guard(const Matrix& m) {
    if (!m.is_square()) throw Error(Err::Schema, "non-square matrix");
    if (m.rows() > 7) throw Error(Err::DimensionTooLarge, "minor enumeration is limited to n <= 7");
}

}  // namespace

bool is_totally_positive(const Matrix& m) {
    guard(m);
    const size_t n = m.rows();
    for (size_t p = 1; p <= n; ++p) {
        auto S = subsets(n, p);
        for (const auto& I : S)
            for (const auto& J : S)
                if (minor(m, I, J).sign() <= 0) return false;
    }
    return true;
}

bool is_tp_unipotent(const Matrix& m0, Side side) {
    guard(m0);
    const Matrix m = side == Side::upper ? m0 : m0.transpose();
    const size_t n = m.rows();
    const FieldElement one = FieldElement::one(m.kind());
    for (size_t i = 0; i < n; ++i) {
        if (m(i, i) != one) return false;
        for (size_t j = 0; j < i; ++j)
            if (!m(i, j).is_zero()) return false;
    }
    for (size_t p = 1; p <= n; ++p) {
        auto S = subsets(n, p);
        for (const auto& I : S)
            for (const auto& J : S) {
                bool forced_zero = false;
                for (size_t l = 0; l < p; ++l)
                    if (I[l] > J[l]) forced_zero = true;
                if (!forced_zero && minor(m, I, J).sign() <= 0) return false;
            }
    }
    return true;
}

Matrix generate_tp_unipotent(size_t n, const Vector& params, Side side) {
    if (n == 0) throw Error(Err::Schema, "dimension must be positive");
    if (params.size() != n * (n - 1) / 2) throw Error(Err::Schema, "expected n(n-1)/2 parameters");
    const FieldKind k = params.empty() ? FieldKind::rational : params[0].kind();
    for (const auto& x : params)
        if (x.sign() <= 0) throw Error(Err::NonPositiveParameter, "parameters must be positive");
    Matrix g = Matrix::identity(n, k);
    size_t idx = 0;
    // Reduced word of the longest permutation: (s_j s_{j+1} ... s_{n-1}) for j = n-1 down to 1.
    for (size_t j = n - 1; j >= 1; --j)
        for (size_t i = j; i <= n - 1; ++i) {
            Matrix e = Matrix::identity(n, k);
            if (side == Side::upper) e(i - 1, i) = params[idx++];
            else e(i, i - 1) = params[idx++];
            g = g * e;
        }
    return g;
}

// ---------------------------------------------------------------- normal form

namespace {

Matrix anti_identity(size_t n, FieldKind k) { return Flag::descending(n, k).basis(); }

// X = L R with L lower unipotent, R upper triangular; no pivoting.
Matrix lower_factor(const Matrix& x) {
    const size_t n = x.rows();
    Matrix a = x, l = Matrix::identity(n, x.kind());
    for (size_t c = 0; c < n; ++c) {
        if (a(c, c).is_zero()) throw Error(Err::NotPositive, "leading minor vanishes");
        for (size_t i = c + 1; i < n; ++i) {
            FieldElement f = a(i, c) / a(c, c);
            l(i, c) = f;
            for (size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return l;
}

Vector intersect_line(const Matrix& A, const Matrix& C) {
    auto ker = kernel(A.hcat(-C));
    if (ker.size() != 1) throw Error(Err::NotTransverse, "subspaces do not meet in a line");
    Vector x(ker[0].begin(), ker[0].begin() + static_cast<long>(A.cols()));
    return A * x;
}

}  // namespace

TPWitness normal_form(const FlagTuple& tuple) {
    if (tuple.size() < 3 || tuple.size() > 5) throw Error(Err::Schema, "normal form takes 3, 4 or 5 flags");
    if (!is_positive_tuple(tuple)) throw Error(Err::NotPositive, "tuple is not positive");
    const size_t n = tuple[0].n();
    const FieldKind k = tuple[0].kind();
    std::vector<Vector> cols;
    for (size_t a = 1; a <= n; ++a) cols.push_back(intersect_line(tuple[0].subspace(a), tuple[2].subspace(n - a + 1)));
    Matrix B = Matrix::from_columns(cols);
    const Vector g = inverse(B) * tuple[1].line();
    for (size_t a = 0; a < n; ++a)
        for (size_t i = 0; i < n; ++i) B(i, a) *= g[a];
    const Matrix Binv = inverse(B);
    const Matrix J = anti_identity(n, k);
    TPWitness w;
    w.basis = B;
    w.u = lower_factor(Binv * tuple[1].basis());
    Matrix acc = Matrix::identity(n, k);
    for (size_t i = 3; i < tuple.size(); ++i) {
        const Matrix y = acc * Binv * tuple[i].basis();
        const Matrix vinv = J * lower_factor(J * y) * J;
        const Matrix v = inverse(vinv);
        w.v_list.push_back(v);
        acc = v * acc;
    }
    if (!is_tp_unipotent(w.u, Side::lower)) throw Error(Err::WitnessVerificationFailed, "u is not totally positive");
    for (const auto& v : w.v_list)
        if (!is_tp_unipotent(v, Side::upper)) throw Error(Err::WitnessVerificationFailed, "v is not totally positive");
    return w;
}

FlagTuple tuple_from_witness(const TPWitness& w) {
    const size_t n = w.basis.rows();
    const FieldKind k = w.basis.kind();
    const Matrix J = anti_identity(n, k);
    FlagTuple out{Flag(w.basis), Flag(w.basis * w.u), Flag(w.basis * J)};
    Matrix acc = w.basis;
    for (const auto& v : w.v_list) {
        acc = acc * inverse(v);
        out.emplace_back(acc * J);
    }
    return out;
}

// ---------------------------------------------------------------- reconstruction

namespace {

FieldElement det_cols(const std::vector<Matrix>& parts) {
    Matrix m;
    for (const auto& p : parts)
        if (p.cols() > 0) m = m.hcat(p);
    return det(m);
}

// Coefficients of w -> det[M | w].
Vector functional(const Matrix& M) {
    const size_t n = M.rows();
    Vector out;
    for (size_t i = 0; i < n; ++i) {
        Matrix e(n, 1, M.kind());
        e(i, 0) = FieldElement::one(M.kind());
        out.push_back(det(M.hcat(e)));
    }
    return out;
}

Matrix columns_of(const Matrix& m, size_t k) { return k == 0 ? Matrix(m.rows(), 0, m.kind()) : m.leading_columns(k); }

// Completes the flag X from its line, given T_{abc}(P, Q, X) for all abc.
Flag fill_flag(const Flag& P, const Flag& Q, const Vector& line,
               const std::function<FieldElement(int, int, int)>& coord) {
    const size_t n = P.n();
    const int ni = static_cast<int>(n);
    Matrix x = Matrix::from_columns({line});
    auto p = [&](int a) { return columns_of(P.basis(), static_cast<size_t>(a)); };
    auto q = [&](int b) { return columns_of(Q.basis(), static_cast<size_t>(b)); };
    auto xs = [&](int c) { return columns_of(x, static_cast<size_t>(c)); };
    for (int c = 1; c <= ni - 2; ++c) {
        std::vector<Vector> rows;
        for (int a = 1; a <= ni - c - 1; ++a) {
            const int b = ni - c - a;
            const FieldElement K = det_cols({p(a + 1), q(b), xs(c - 1)}) * det_cols({p(a - 1), q(b + 1), xs(c)}) /
                                   (det_cols({p(a), q(b + 1), xs(c - 1)}) * det_cols({p(a + 1), q(b - 1), xs(c)}));
            const FieldElement T = coord(a, b, c);
            Vector l1 = functional(p(a).hcat(q(b - 1)).hcat(xs(c)));
            Vector l2 = functional(p(a - 1).hcat(q(b)).hcat(xs(c)));
            Vector r(n);
            for (size_t i = 0; i < n; ++i) r[i] = K * l1[i] - T * l2[i];
            rows.push_back(std::move(r));
        }
        std::optional<Vector> pick;
        for (const auto& v : kernel(Matrix::from_rows(rows))) {
            if (rank(x.hcat(Matrix::from_columns({v}))) == static_cast<size_t>(c) + 1) {
                pick = v;
                break;
            }
        }
        if (!pick) throw Error(Err::ReconstructionFailed, "no admissible subspace extension");
        x = x.hcat(Matrix::from_columns({*pick}));
    }
    return flag_from_partial(x);
}

}  // namespace

FlagTuple reconstruct_tuple(const IdealTriangulation& tri, const PositivityCoordinates& coords, size_t n) {
    tri.validate();
    if (n < 2) throw Error(Err::Schema, "dimension must be at least 2");
    if (coords.n != n || coords.T.size() != tri.k - 2 || coords.D.size() != tri.k - 3)
        throw Error(Err::SchemaMismatch, "coordinates do not match the triangulation");
    if (!coords.all_positive()) throw Error(Err::NonPositiveCoordinate, "coordinates must be positive");
    const FieldKind kind = !coords.T.empty() && !coords.T[0].empty() ? coords.T[0][0].kind()
                           : !coords.D.empty()                     ? coords.D[0][0].kind()
                                                                   : FieldKind::rational;
    const auto abc = abc_triples(n);
    const auto tris = tri.triangles();
    std::vector<std::optional<Flag>> F(tri.k + 1);

    auto fill_in_triangle = [&](size_t t, size_t z, const Vector& line) {
        auto o = tri.oriented_triangle(t);
        const size_t pos = static_cast<size_t>(std::find(o.begin(), o.end(), z) - o.begin());
        auto T = [&](int a, int b, int c) {
            for (size_t i = 0; i < abc.size(); ++i)
                if (abc[i][0] == a && abc[i][1] == b && abc[i][2] == c) return coords.T[t][i];
            throw Error(Err::ReconstructionFailed, "missing triple index");
        };
        // Rotate so the unknown flag sits in the third slot.
        if (pos == 2) F[z] = fill_flag(*F[o[0]], *F[o[1]], line, [&](int a, int b, int c) { return T(a, b, c); });
        else if (pos == 1) F[z] = fill_flag(*F[o[2]], *F[o[0]], line, [&](int a, int b, int c) { return T(b, c, a); });
        else F[z] = fill_flag(*F[o[1]], *F[o[2]], line, [&](int a, int b, int c) { return T(c, a, b); });
    };

    {
        auto o = tri.oriented_triangle(0);
        F[o[0]] = Flag::ascending(n, kind);
        F[o[2]] = Flag::descending(n, kind);
        fill_in_triangle(0, o[1], Vector(n, FieldElement::one(kind)));
    }
    std::vector<bool> done(tris.size(), false);
    done[0] = true;
    std::deque<size_t> queue{0};
    auto contains = [](const std::array<size_t, 3>& t, size_t v) { return std::find(t.begin(), t.end(), v) != t.end(); };
    while (!queue.empty()) {
        const size_t t = queue.front();
        queue.pop_front();
        for (size_t e = 0; e < tri.diagonals.size(); ++e) {
            auto [ep, er, em, el] = tri.diagonal_quad(e);
            if (!contains(tris[t], ep) || !contains(tris[t], em)) continue;
            size_t other = tris.size();
            for (size_t s = 0; s < tris.size(); ++s)
                if (s != t && contains(tris[s], ep) && contains(tris[s], em)) other = s;
            if (other == tris.size() || done[other]) continue;
            const bool right_unknown = !F[er].has_value();
            const size_t z = right_unknown ? er : el;
            const Flag& E = *F[ep];
            const Flag& Fm = *F[em];
            const Flag& known = right_unknown ? *F[el] : *F[er];
            std::vector<Vector> rows;
            for (size_t a = 1; a < n; ++a) {
                const Matrix Ea = columns_of(E.basis(), a), Ea1 = columns_of(E.basis(), a - 1);
                const Matrix Fb = columns_of(Fm.basis(), n - a - 1), Fb1 = columns_of(Fm.basis(), n - a);
                const Matrix kl = known.basis().leading_columns(1);
                const Vector A = functional(Ea.hcat(Fb)), B = functional(Ea1.hcat(Fb1));
                const FieldElement Ak = det_cols({Ea, Fb, kl}), Bk = det_cols({Ea1, Fb1, kl});
                const FieldElement D = coords.D[e][a - 1];
                Vector r(n);
                // D = -A(g) B(h) / (A(h) B(g))
                for (size_t i = 0; i < n; ++i) r[i] = right_unknown ? D * Ak * B[i] + Bk * A[i] : D * Bk * A[i] + Ak * B[i];
                rows.push_back(std::move(r));
            }
            Vector line;
            if (rows.empty()) throw Error(Err::ReconstructionFailed, "no equations for the new line");
            auto ker = kernel(Matrix::from_rows(rows));
            if (ker.size() != 1) throw Error(Err::ReconstructionFailed, "double ratios do not determine a line");
            line = ker[0];
            fill_in_triangle(other, z, line);
            done[other] = true;
            queue.push_back(other);
        }
    }
    FlagTuple out;
    for (size_t v = 1; v <= tri.k; ++v) {
        if (!F[v]) throw Error(Err::ReconstructionFailed, "vertex not reached");
        out.push_back(*F[v]);
    }
    if (!(phi(tri, out) == coords)) throw Error(Err::ReconstructionFailed, "round trip does not reproduce the coordinates");
    return out;
}

bool check_monotonicity(const FlagTuple& t) {
    if (t.size() != 5) throw Error(Err::Schema, "monotonicity takes a 5-tuple");
    if (!is_positive_tuple(t)) throw Error(Err::NotPositive, "tuple is not positive");
    const int n = static_cast<int>(t[0].n());
    for (int a = 1; a < n; ++a)
        if (!(double_ratio(t[0], t[2], t[1], t[3], a) < double_ratio(t[0], t[2], t[1], t[4], a))) return false;
    return true;
}

}  // namespace posflag
