#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace painleve {

/// Mantissa width for inexact arithmetic. Epsilon is 2^(1-bits).
struct PrecisionContext {
    long bits;

    explicit PrecisionContext(long b = 256);
};

class Rational;

/// Arbitrary-precision binary float (MPFR, round-to-nearest). Each value
/// carries its own precision; binary operations widen to the larger operand.
class Real {
  public:
    Real();
    explicit Real(long prec_bits);
    Real(double v, long prec_bits);
    Real(long v, long prec_bits, int /*tag*/);
    Real(const std::string& decimal, long prec_bits);
    Real(const Rational& q, long prec_bits);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real from_long(long v, long prec_bits);
    static Real pi(long prec_bits);
    static Real sqrt2(long prec_bits);
    /// 2^(1-bits)
    static Real epsilon(long prec_bits);
    static Real pow2(long exponent, long prec_bits);

    long precision() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    /// Decimal string with enough digits to round-trip at this precision.
    std::string str() const;
    std::string str(int digits) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    Real operator-() const;
    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real asin(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real pow_int(const Real& x, long n);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

}  // namespace painleve
