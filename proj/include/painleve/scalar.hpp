#pragma once

#include <string>
#include <variant>

#include "painleve/precision.hpp"
#include "painleve/rational.hpp"

namespace painleve {

/// Complex value as a pair of reals sharing one precision context.
struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    long precision() const { return std::max(re.precision(), im.precision()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Real abs(const Complex& z);

enum class ScalarKind { ExactRational, InexactReal, InexactComplex };

/// Tagged numeric value: exact rational, or configurable-precision real or
/// complex. Arithmetic between two exact rationals is exact; mixing exact and
/// inexact promotes to inexact at the larger operand precision.
class Scalar {
  public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long v) : v_(Rational(v)) {}
    Scalar(Rational q) : v_(std::move(q)) {}
    Scalar(Real r) : v_(std::move(r)) {}
    Scalar(Complex z) : v_(std::move(z)) {}

    ScalarKind kind() const;
    bool is_exact() const { return kind() == ScalarKind::ExactRational; }
    bool is_zero() const;

    /// Precision in bits for inexact kinds; 0 for exact rationals.
    long precision() const;

    const Rational& rational() const;  // throws unless exact
    const Real& real() const;          // throws unless real kind
    const Complex& complex() const;    // throws unless complex kind

    /// Numeric view at the given precision (exact values are rounded;
    /// complex values must have zero imaginary part).
    Real to_real(long bits) const;

    Scalar operator-() const;
    Scalar inverse() const;

    std::string str() const;  // "num/den" for exact, decimal for inexact

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    /// Exact comparison. Inexact values compare by value at their precision.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  private:
    std::variant<Rational, Real, Complex> v_;
};

enum class ScalarOp { Add, Sub, Mul, Div };

/// The spec-level arithmetic entry point; Div signals DivisionByZero.
Scalar rat_arith(const Scalar& a, const Scalar& b, ScalarOp op);

/// Parses an exact "num/den" string or a decimal literal (decimal implies
/// inexact at the given bits).
Scalar parse_scalar(const std::string& text, long bits);

}  // namespace painleve
