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

#include "posflag/ordered_field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace posflag {

const char* err_name(Err e) noexcept {
    switch (e) {
        case Err::Schema: return "SchemaError";
        case Err::SchemaMismatch: return "SchemaMismatch";
        case Err::UnknownGenerator: return "UnknownGenerator";
        case Err::IndexOutOfRange: return "IndexOutOfRange";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::MixedFieldTags: return "MixedFieldTags";
        case Err::ZeroInput: return "ZeroInput";
        case Err::ZeroPolynomial: return "ZeroPolynomial";
        case Err::DeterminantNotUnit: return "DeterminantNotUnit";
        case Err::DeterminantNotOne: return "DeterminantNotOne";
        case Err::SpectrumNotInField: return "SpectrumNotInField";
        case Err::RepeatedEigenvalue: return "RepeatedEigenvalue";
        case Err::SingularBasis: return "SingularBasis";
        case Err::SingularGroupElement: return "SingularGroupElement";
        case Err::NotTransverse: return "NotTransverse";
        case Err::NotPositivelyHyperbolic: return "NotPositivelyHyperbolic";
        case Err::TriangulationMismatch: return "TriangulationMismatch";
        case Err::DimensionTooLarge: return "DimensionTooLarge";
        case Err::NonPositiveParameter: return "NonPositiveParameter";
        case Err::NotPositive: return "NotPositive";
        case Err::WitnessVerificationFailed: return "WitnessVerificationFailed";
        case Err::NonPositiveCoordinate: return "NonPositiveCoordinate";
        case Err::ReconstructionFailed: return "ReconstructionFailed";
        case Err::MissingArcData: return "MissingArcData";
        case Err::MissingSpiralData: return "MissingSpiralData";
        case Err::NotDynamicsPreserving: return "NotDynamicsPreserving";
        case Err::NoTransverseTriple: return "NoTransverseTriple";
        case Err::WellDefinednessViolation: return "WellDefinednessViolation";
    }
    return "Error";
}

bool is_input_error(Err e) noexcept {
    return e == Err::Schema || e == Err::SchemaMismatch || e == Err::UnknownGenerator || e == Err::IndexOutOfRange;
}

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const mpz_class& c) { return ZPoly({c}); }

ZPoly ZPoly::monomial(const mpz_class& c, size_t degree) {
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return ZPoly(std::move(v));
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (lc() < 0) g = -g;
    return divexact(g);
}

mpq_class ZPoly::eval(const mpq_class& t) const {
    mpq_class r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return ZPoly(std::move(r));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(std::move(r));
}

ZPoly operator*(const ZPoly& a, const mpz_class& s) {
    if (s == 0) return ZPoly();
    ZPoly r = a;
    for (auto& x : r.c_) x *= s;
    return r;
}

ZPoly ZPoly::divexact(const mpz_class& s) const {
    ZPoly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    return r;
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
    if (d.is_zero()) throw Error(Err::DivisionByZero, "polynomial division by zero");
    if (is_zero()) return ZPoly();
    if (d.degree() == 0) return divexact(d.lc());
    std::vector<mpz_class> rem = c_;
    const size_t dn = d.c_.size();
    std::vector<mpz_class> q(c_.size() - dn + 1);
    for (size_t k = q.size(); k-- > 0;) {
        const mpz_class& top = rem[k + dn - 1];
        if (top == 0) continue;
        mpz_class qk;
        mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), d.lc().get_mpz_t());
        for (size_t j = 0; j < dn; ++j) rem[k + j] -= qk * d.c_[j];
        q[k] = std::move(qk);
    }
    return ZPoly(std::move(q));
}

ZPoly ZPoly::pseudo_rem(const ZPoly& d) const {
    if (d.is_zero()) throw Error(Err::DivisionByZero, "pseudo-remainder by zero");
    ZPoly r = *this;
    long e = degree() - d.degree() + 1;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        ZPoly s = ZPoly::monomial(r.lc(), static_cast<size_t>(r.degree() - d.degree()));
        r = r * d.lc() - s * d;
        --e;
    }
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), d.lc().get_mpz_t(), static_cast<unsigned long>(e));
        r = r * f;
    }
    return r;
}

std::string ZPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        mpz_class a = abs(c_[i]);
        if (!first) os << (c_[i] < 0 ? " - " : " + ");
        else if (c_[i] < 0) os << "-";
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

// Subresultant remainder sequence on primitive parts.
ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
    if (a0.is_zero()) return b0.primitive() * abs(b0.is_zero() ? mpz_class(0) : b0.content());
    if (b0.is_zero()) return a0.primitive() * a0.content();
    ZPoly a = a0, b = b0;
    if (a.degree() < b.degree()) std::swap(a, b);
    mpz_class d;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(d.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = a.primitive();
    b = b.primitive();
    if (b.degree() == 0) return ZPoly::constant(d);
    mpz_class g = 1, h = 1;
    for (;;) {
        const long delta = a.degree() - b.degree();
        ZPoly r = a.pseudo_rem(b);
        if (r.is_zero()) break;
        if (r.degree() == 0) return ZPoly::constant(d);
        a = b;
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        b = r.divexact(mpz_class(g * hd));
        g = a.lc();
        if (delta == 0) {
            // h unchanged
        } else {
            mpz_class gd, hd1;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
        }
    }
    return b.primitive() * d;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc() : num_(), den_(ZPoly::constant(1)) {}

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(Err::DivisionByZero, "rational function with zero denominator");
    normalize();
}

RatFunc::RatFunc(const mpq_class& q0) {
    mpq_class q = q0;
    q.canonicalize();
    num_ = ZPoly::constant(q.get_num());
    den_ = ZPoly::constant(q.get_den());
}

RatFunc RatFunc::t() { return RatFunc(ZPoly::monomial(1, 1), ZPoly::constant(1)); }

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = ZPoly::constant(1);
        return;
    }
    if (den_.degree() == 0 && num_.degree() == 0) {
        mpq_class q(num_.lc(), den_.lc());
        q.canonicalize();
        num_ = ZPoly::constant(q.get_num());
        den_ = ZPoly::constant(q.get_den());
        return;
    }
    ZPoly g = gcd(num_, den_);
    if (!(g.degree() == 0 && g.lc() == 1)) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (den_.lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

int RatFunc::sign() const {
    if (num_.is_zero()) return 0;
    int s = num_.lc() > 0 ? 1 : -1;
    SignAudit::record(*this, s);
    return s;
}

mpq_class RatFunc::eval(const mpq_class& t) const {
    mpq_class d = den_.eval(t);
    if (d == 0) throw Error(Err::DivisionByZero, "evaluation at a pole");
    return num_.eval(t) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(Err::DivisionByZero, "division by zero in Q(t)");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str() const {
    if (den_.degree() == 0 && den_.lc() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

mpq_class cauchy_bound(const ZPoly& p) {
    mpq_class m = 0;
    const mpz_class lead = abs(p.lc());
    for (long i = 0; i < p.degree(); ++i) {
        mpq_class r(abs(p.coeffs()[static_cast<size_t>(i)]), lead);
        r.canonicalize();
        if (r > m) m = r;
    }
    return 1 + m;
}

}  // namespace

mpq_class stability_bound(const RatFunc& x) {
    if (x.is_zero()) throw Error(Err::ZeroInput, "stability bound of zero");
    mpq_class a = cauchy_bound(x.num()), b = cauchy_bound(x.den());
    return a > b ? a : b;
}

// ---------------------------------------------------------------- FieldElement

namespace {

[[noreturn]] void mixed() { throw Error(Err::MixedFieldTags, "operands carry different field tags"); }

}  // namespace

FieldElement FieldElement::from_int(long v, FieldKind k) { return from_rational(mpq_class(v), k); }

FieldElement FieldElement::from_rational(const mpq_class& q, FieldKind k) {
    if (k == FieldKind::rational) return FieldElement(q);
    return FieldElement(RatFunc(q));
}

bool FieldElement::is_zero() const { return is_rational() ? rational() == 0 : ratfunc().is_zero(); }

int FieldElement::sign() const { return is_rational() ? sgn(rational()) : ratfunc().sign(); }

FieldElement FieldElement::inv() const {
    if (is_zero()) throw Error(Err::DivisionByZero, "inverse of zero");
    if (is_rational()) return FieldElement(mpq_class(1) / rational());
    return FieldElement(RatFunc(mpq_class(1)) / ratfunc());
}

mpq_class FieldElement::eval(const mpq_class& t) const { return is_rational() ? rational() : ratfunc().eval(t); }

FieldElement FieldElement::operator-() const {
    if (is_rational()) return FieldElement(mpq_class(-rational()));
    return FieldElement(-ratfunc());
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    if (a.v_.index() != b.v_.index()) mixed();
    if (a.is_rational()) return FieldElement(mpq_class(a.rational() + b.rational()));
    return FieldElement(a.ratfunc() + b.ratfunc());
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    if (a.v_.index() != b.v_.index()) mixed();
    if (a.is_rational()) return FieldElement(mpq_class(a.rational() - b.rational()));
    return FieldElement(a.ratfunc() - b.ratfunc());
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (a.v_.index() != b.v_.index()) mixed();
    if (a.is_rational()) return FieldElement(mpq_class(a.rational() * b.rational()));
    return FieldElement(a.ratfunc() * b.ratfunc());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    if (a.v_.index() != b.v_.index()) mixed();
    if (b.is_zero()) throw Error(Err::DivisionByZero, "division by zero");
    if (a.is_rational()) return FieldElement(mpq_class(a.rational() / b.rational()));
    return FieldElement(a.ratfunc() / b.ratfunc());
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.v_.index() != b.v_.index()) mixed();
    if (a.is_rational()) return a.rational() == b.rational();
    return a.ratfunc() == b.ratfunc();
}

std::string FieldElement::str() const { return is_rational() ? rational().get_str() : ratfunc().str(); }

FieldElement pow(const FieldElement& x, long e) {
    if (e < 0) return pow(x.inv(), -e);
    FieldElement r = x.one_like(), b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------- SignAudit

namespace {
thread_local SignAudit* current_audit = nullptr;
}

SignAudit::SignAudit() : prev_(current_audit) { current_audit = this; }

SignAudit::~SignAudit() { current_audit = prev_; }

void SignAudit::record(const RatFunc& x, int s) {
    if (current_audit != nullptr) current_audit->entries_.push_back({x, s});
}

}  // namespace posflag
