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

#include "posflag/reps.hpp"

#include <cctype>
#include <sstream>

namespace posflag {

// ---------------------------------------------------------------- words

Word parse_word(const std::string& s) {
    std::istringstream is(s);
    std::string tok;
    Word w;
    while (is >> tok) {
        Letter l;
        auto caret = tok.find('^');
        l.gen = tok.substr(0, caret);
        if (l.gen.empty() || !(std::isalpha(static_cast<unsigned char>(l.gen[0])) || l.gen[0] == '_'))
            throw Error(Err::Schema, "bad generator token '" + tok + "'");
        for (char ch : l.gen)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
                throw Error(Err::Schema, "bad generator token '" + tok + "'");
        if (caret != std::string::npos) {
            const std::string e = tok.substr(caret + 1);
            size_t used = 0;
            try {
                l.power = std::stol(e, &used);
            } catch (const std::exception&) {
                throw Error(Err::Schema, "bad exponent in '" + tok + "'");
            }
            if (used != e.size()) throw Error(Err::Schema, "bad exponent in '" + tok + "'");
        }
        if (l.power != 0) w.push_back(l);
    }
    return w;
}

std::string word_str(const Word& w) {
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += l.gen;
        if (l.power != 1) s += "^" + std::to_string(l.power);
    }
    return s;
}

Word word_inverse(const Word& w) {
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->power});
    return r;
}

Word word_concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// ---------------------------------------------------------------- representations

size_t Representation::n() const {
    if (generators.empty()) throw Error(Err::Schema, "representation has no generators");
    return generators.begin()->second.rows();
}

FieldKind Representation::kind() const {
    if (generators.empty()) throw Error(Err::Schema, "representation has no generators");
    return generators.begin()->second.kind();
}

Matrix iota(const Matrix& A, size_t n) {
    if (A.rows() != 2 || A.cols() != 2) throw Error(Err::Schema, "iota takes a 2 x 2 matrix");
    if (n == 0) throw Error(Err::Schema, "dimension must be positive");
    const FieldKind k = A.kind();
    if (det(A) != FieldElement::one(k)) throw Error(Err::DeterminantNotOne, "iota needs determinant one");
    // X -> a X + c Y, Y -> b X + d Y; binary forms are polynomials in s = Y / X.
    const size_t m = n - 1;
    auto power = [&](const UPoly& p, size_t e) {
        UPoly r = UPoly::constant(FieldElement::one(k));
        for (size_t i = 0; i < e; ++i) r = r * p;
        return r;
    };
    const UPoly X_to(Vector{A(0, 0), A(1, 0)});
    const UPoly Y_to(Vector{A(0, 1), A(1, 1)});
    Matrix out(n, n, k);
    for (size_t i = 0; i <= m; ++i) {
        const UPoly img = power(X_to, m - i) * power(Y_to, i);
        for (size_t j = 0; j <= m; ++j) out(j, i) = img.is_zero() ? FieldElement::zero(k) : img.coeff(j);
    }
    return out;
}

Representation iota(const Representation& rep, size_t n) {
    Representation r = rep;
    for (auto& [name, g] : r.generators) g = iota(g, n);
    return r;
}

Matrix word_image(const Representation& rep, const Word& w) {
    const size_t n = rep.n();
    const FieldKind k = rep.kind();
    Matrix g = Matrix::identity(n, k);
    std::map<std::string, Matrix> inv_cache;
    for (const auto& l : w) {
        auto it = rep.generators.find(l.gen);
        if (it == rep.generators.end()) throw Error(Err::UnknownGenerator, "unknown generator '" + l.gen + "'");
        const Matrix* base = &it->second;
        if (l.power < 0) {
            auto ic = inv_cache.find(l.gen);
            if (ic == inv_cache.end()) ic = inv_cache.emplace(l.gen, inverse(it->second)).first;
            base = &ic->second;
        }
        for (long e = 0; e < (l.power < 0 ? -l.power : l.power); ++e) g = g * *base;
    }
    return g;
}

Matrix word_image(const Representation& rep, const std::string& w) { return word_image(rep, parse_word(w)); }

Word surface_relation(int genus) {
    Word w;
    for (int i = 1; i <= genus; ++i) {
        const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        w.insert(w.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
    }
    return w;
}

bool verify_relation(const Representation& rep) {
    if (!rep.genus) return true;
    const Matrix r = word_image(rep, surface_relation(*rep.genus));
    const Matrix id = Matrix::identity(rep.n(), rep.kind());
    return r == id || (rep.projective && r == -id);
}

std::vector<WordVerdict> certify_positively_hyperbolic(const Representation& rep, const std::vector<std::string>& words) {
    std::vector<WordVerdict> out;
    for (const auto& w : words) {
        WordVerdict v;
        v.word = w;
        const Matrix g = word_image(rep, w);
        try {
            v.verdict = is_positively_hyperbolic(g, rep.projective);
        } catch (const Error& e) {
            if (is_input_error(e.code())) throw;
            v.error = e.what();
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::map<std::string, Flag> limit_flags(const Representation& rep, const std::vector<std::string>& words,
                                        const std::vector<std::vector<std::string>>& coincide) {
    std::map<std::string, Flag> out;
    for (const auto& w : words)
        if (!out.count(w)) out.emplace(w, stable_flag(word_image(rep, w)));
    for (const auto& group : coincide) {
        for (const auto& w : group)
            if (!out.count(w)) out.emplace(w, stable_flag(word_image(rep, w)));
        for (size_t i = 1; i < group.size(); ++i)
            if (out.at(group[i]) != out.at(group[0]))
                throw Error(Err::WellDefinednessViolation, "'" + group[0] + "' and '" + group[i] + "' have different stable flags");
    }
    return out;
}

bool is_positive_triple(const Flag& E, const Flag& F, const Flag& G) {
    if (!is_transverse({E, F, G})) return false;
    for (const auto& [a, b, c] : abc_triples(E.n()))
        if (triple_ratio(E, F, G, a, b, c).sign() <= 0) return false;
    return true;
}

bool is_positive_quadruple(const Flag& E, const Flag& F, const Flag& G, const Flag& H) {
    if (!is_transverse({E, F, G, H})) return false;
    if (!is_positive_triple(E, F, G) || !is_positive_triple(E, G, H)) return false;
    for (int a = 1; a < static_cast<int>(E.n()); ++a)
        if (double_ratio(E, G, F, H, a).sign() <= 0) return false;
    return true;
}

WitnessReport check_positive_on_witness(const Representation& rep, const WitnessOrder& order) {
    const auto flags = limit_flags(rep, order.words, order.coincide);
    const auto& w = order.words;
    const size_t m = w.size();
    WitnessReport rep_out;
    auto F = [&](size_t i) -> const Flag& { return flags.at(w[i]); };
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k) {
                ++rep_out.triples;
                if (!is_transverse({F(i), F(j), F(k)}))
                    rep_out.failures.push_back({{w[i], w[j], w[k]}, "not transverse"});
                else if (!is_positive_triple(F(i), F(j), F(k)))
                    rep_out.failures.push_back({{w[i], w[j], w[k]}, "triple ratio not positive"});
                for (size_t l = k + 1; l < m; ++l) {
                    ++rep_out.quadruples;
                    if (!is_transverse({F(i), F(j), F(k), F(l)}))
                        rep_out.failures.push_back({{w[i], w[j], w[k], w[l]}, "not transverse"});
                    else if (!is_positive_quadruple(F(i), F(j), F(k), F(l)))
                        rep_out.failures.push_back({{w[i], w[j], w[k], w[l]}, "quadruple not positive"});
                }
            }
    return rep_out;
}

bool is_irreducible(const std::vector<Matrix>& mats, std::optional<size_t> max_word_length) {
    if (mats.empty()) return false;
    const size_t n = mats[0].rows();
    const FieldKind k = mats[0].kind();
    const size_t len = max_word_length.value_or(2 * n);
    auto flat = [&](const Matrix& g) {
        Vector v;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v.push_back(g(i, j));
        return v;
    };
    std::vector<Matrix> basis{Matrix::identity(n, k)};
    std::vector<Vector> rows{flat(basis[0])};
    std::vector<Matrix> frontier = basis;
    for (size_t step = 0; step < len && basis.size() < n * n && !frontier.empty(); ++step) {
        std::vector<Matrix> next;
        for (const auto& g : mats)
            for (const auto& s : frontier) {
                Matrix p = g * s;
                rows.push_back(flat(p));
                if (rank(Matrix::from_rows(rows)) == rows.size()) {
                    basis.push_back(p);
                    next.push_back(std::move(p));
                } else {
                    rows.pop_back();
                }
            }
        frontier = std::move(next);
    }
    return basis.size() == n * n;
}

}  // namespace posflag
