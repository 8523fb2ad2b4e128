#include "painleve/precision.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "painleve/errors.hpp"
#include "painleve/rational.hpp"

namespace painleve {

PrecisionContext::PrecisionContext(long b) : bits(b) {
    if (bits < 64) throw DomainError("PrecisionContext requires at least 64 mantissa bits");
}

Real::Real() {
    mpfr_init2(v_, 64);
    mpfr_set_zero(v_, 1);
}

Real::Real(long prec_bits) {
    mpfr_init2(v_, std::max(prec_bits, 2L));
    mpfr_set_zero(v_, 1);
}

Real::Real(double v, long prec_bits) {
    mpfr_init2(v_, std::max(prec_bits, 2L));
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(long v, long prec_bits, int) {
    mpfr_init2(v_, std::max(prec_bits, 2L));
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const std::string& decimal, long prec_bits) {
    mpfr_init2(v_, std::max(prec_bits, 2L));
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("cannot parse real literal: " + decimal);
}

Real::Real(const Rational& q, long prec_bits) {
    mpfr_init2(v_, std::max(prec_bits, 2L));
    mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_long(long v, long prec_bits) { return Real(v, prec_bits, 0); }

Real Real::pi(long prec_bits) {
    Real r(prec_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::sqrt2(long prec_bits) {
    Real r(prec_bits);
    mpfr_sqrt_ui(r.v_, 2, MPFR_RNDN);
    return r;
}

Real Real::epsilon(long prec_bits) { return pow2(1 - prec_bits, prec_bits); }

Real Real::pow2(long exponent, long prec_bits) {
    Real r(prec_bits);
    mpfr_set_si_2exp(r.v_, 1, exponent, MPFR_RNDN);
    return r;
}

int Real::sign() const {
    if (mpfr_zero_p(v_)) return 0;
    return mpfr_sgn(v_) > 0 ? 1 : -1;
}

std::string Real::str() const {
    int digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 2;
    return str(digits);
}

std::string Real::str(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    // strip trailing zeros, keep at least one digit
    size_t last = d.find_last_not_of('0');
    if (last == std::string::npos)
        d = "0";
    else
        d = d.substr(0, last + 1);
    std::string out = (neg ? "-" : "");
    if (d == "0") return "0";
    out += "0." + d + "e" + std::to_string(static_cast<long>(e));
    return out;
}

static long join_prec(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real operator+(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) throw DivisionByZero("real division by zero");
    Real r(join_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

#define PAINLEVE_REAL_FN(name, mpfr_name)          \
    Real name(const Real& x) {                     \
        Real r(x.precision());                     \
        mpfr_name(r.raw(), x.raw(), MPFR_RNDN);    \
        return r;                                  \
    }

PAINLEVE_REAL_FN(abs, mpfr_abs)
PAINLEVE_REAL_FN(sin, mpfr_sin)
PAINLEVE_REAL_FN(cos, mpfr_cos)
PAINLEVE_REAL_FN(tan, mpfr_tan)
PAINLEVE_REAL_FN(atan, mpfr_atan)
PAINLEVE_REAL_FN(exp, mpfr_exp)
PAINLEVE_REAL_FN(sinh, mpfr_sinh)
PAINLEVE_REAL_FN(cosh, mpfr_cosh)
PAINLEVE_REAL_FN(tanh, mpfr_tanh)
#undef PAINLEVE_REAL_FN

Real sqrt(const Real& x) {
    if (x.is_negative()) throw DomainError("sqrt of negative value");
    Real r(x.precision());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real asin(const Real& x) {
    Real r(x.precision());
    mpfr_asin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    if (x.sign() <= 0) throw DomainError("log of nonpositive value");
    Real r(x.precision());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real pow_int(const Real& x, long n) {
    Real r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

}  // namespace painleve
