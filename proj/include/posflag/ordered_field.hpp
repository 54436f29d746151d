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
   Exact ordered fields: Q, and Q(t) ordered at t -> +infinity.

   A FieldElement carries a tag. Arithmetic between different tags throws
   MixedFieldTags; every result is normalized eagerly, so equality is
   structural.
*/

#ifndef POSFLAG_ORDERED_FIELD_HPP
#define POSFLAG_ORDERED_FIELD_HPP

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "posflag/errors.hpp"

namespace posflag {

enum class FieldKind { rational, ratfunc };

// Integer polynomial in t, ascending coefficients, no trailing zeros.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs);
    static ZPoly constant(const mpz_class& c);
    static ZPoly monomial(const mpz_class& c, size_t degree);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const mpz_class& lc() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

    mpz_class content() const;
    ZPoly primitive() const;
    mpq_class eval(const mpq_class& t) const;

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const mpz_class& s);
    ZPoly operator-() const;
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    // Exact quotient; the divisor must divide this polynomial in Z[t].
    ZPoly divexact(const ZPoly& d) const;
    ZPoly divexact(const mpz_class& s) const;
    // lc(d)^(deg a - deg d + 1) a mod d
    ZPoly pseudo_rem(const ZPoly& d) const;

    std::string str(const char* var = "t") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// gcd over Z[t], normalized to positive leading coefficient
ZPoly gcd(const ZPoly& a, const ZPoly& b);

class RatFunc {
public:
    RatFunc();
    RatFunc(ZPoly num, ZPoly den);
    explicit RatFunc(const mpq_class& q);
    static RatFunc t();

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    int sign() const;
    mpq_class eval(const mpq_class& t) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string str() const;

private:
    void normalize();
    ZPoly num_, den_;
};

// Every rational t >= the bound has sign(x(t)) = sign(x).
mpq_class stability_bound(const RatFunc& x);

class FieldElement {
public:
    FieldElement() : v_(mpq_class(0)) {}
    FieldElement(const mpq_class& q) : v_(q) { std::get<0>(v_).canonicalize(); }
    FieldElement(const RatFunc& f) : v_(f) {}

    static FieldElement from_int(long v, FieldKind k);
    static FieldElement from_rational(const mpq_class& q, FieldKind k);
    static FieldElement zero(FieldKind k) { return from_int(0, k); }
    static FieldElement one(FieldKind k) { return from_int(1, k); }

    FieldKind kind() const { return v_.index() == 0 ? FieldKind::rational : FieldKind::ratfunc; }
    bool is_rational() const { return v_.index() == 0; }
    const mpq_class& rational() const { return std::get<0>(v_); }
    const RatFunc& ratfunc() const { return std::get<1>(v_); }

    bool is_zero() const;
    int sign() const;
    FieldElement inv() const;
    FieldElement abs() const { return sign() < 0 ? -*this : *this; }
    FieldElement zero_like() const { return zero(kind()); }
    FieldElement one_like() const { return one(kind()); }
    // Specializes t; a rational stays as is.
    mpq_class eval(const mpq_class& t) const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    friend bool operator<(const FieldElement& a, const FieldElement& b) { return (b - a).sign() > 0; }
    friend bool operator>(const FieldElement& a, const FieldElement& b) { return b < a; }
    friend bool operator<=(const FieldElement& a, const FieldElement& b) { return !(b < a); }
    friend bool operator>=(const FieldElement& a, const FieldElement& b) { return !(a < b); }

    std::string str() const;

private:
    std::variant<mpq_class, RatFunc> v_;
};

FieldElement pow(const FieldElement& x, long e);

/*
   Records every nonzero Q(t) value whose sign is decided while the scope is
   alive on this thread. Used to replay order decisions at a specialization.
*/
class SignAudit {
public:
    SignAudit();
    ~SignAudit();
    SignAudit(const SignAudit&) = delete;
    SignAudit& operator=(const SignAudit&) = delete;

    struct Entry {
        RatFunc value;
        int sign;
    };
    const std::vector<Entry>& entries() const { return entries_; }
    static void record(const RatFunc& x, int s);

private:
    std::vector<Entry> entries_;
    SignAudit* prev_;
};

}  // namespace posflag

#endif
