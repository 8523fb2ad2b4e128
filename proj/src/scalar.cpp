#include "painleve/scalar.hpp"

#include <algorithm>

#include "painleve/errors.hpp"

namespace painleve {

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    if (d.is_zero()) throw DivisionByZero("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Real abs(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

ScalarKind Scalar::kind() const {
    if (std::holds_alternative<Rational>(v_)) return ScalarKind::ExactRational;
    if (std::holds_alternative<Real>(v_)) return ScalarKind::InexactReal;
    return ScalarKind::InexactComplex;
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& v) { return v.is_zero(); }, v_);
}

long Scalar::precision() const {
    switch (kind()) {
        case ScalarKind::ExactRational: return 0;
        case ScalarKind::InexactReal: return std::get<Real>(v_).precision();
        case ScalarKind::InexactComplex: return std::get<Complex>(v_).precision();
    }
    return 0;
}

const Rational& Scalar::rational() const {
    if (!std::holds_alternative<Rational>(v_)) throw DomainError("scalar is not exact rational");
    return std::get<Rational>(v_);
}

const Real& Scalar::real() const {
    if (!std::holds_alternative<Real>(v_)) throw DomainError("scalar is not a real");
    return std::get<Real>(v_);
}

const Complex& Scalar::complex() const {
    if (!std::holds_alternative<Complex>(v_)) throw DomainError("scalar is not complex");
    return std::get<Complex>(v_);
}

Real Scalar::to_real(long bits) const {
    switch (kind()) {
        case ScalarKind::ExactRational: return Real(rational(), bits);
        case ScalarKind::InexactReal: return real();
        case ScalarKind::InexactComplex:
            if (!complex().im.is_zero()) throw DomainError("complex scalar has nonzero imaginary part");
            return complex().re;
    }
    throw InternalError("unreachable scalar kind");
}

Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Scalar Scalar::operator-() const {
    return std::visit([](const auto& v) { return Scalar(-v); }, v_);
}

Scalar Scalar::inverse() const {
    switch (kind()) {
        case ScalarKind::ExactRational: return Scalar(rational().inverse());
        case ScalarKind::InexactReal: {
            const Real& r = real();
            if (r.is_zero()) throw DivisionByZero("inverse of zero");
            return Scalar(Real::from_long(1, r.precision()) / r);
        }
        case ScalarKind::InexactComplex: {
            const Complex& z = complex();
            Complex one{Real::from_long(1, z.precision()), Real(z.precision())};
            return Scalar(one / z);
        }
    }
    throw InternalError("unreachable scalar kind");
}

std::string Scalar::str() const {
    switch (kind()) {
        case ScalarKind::ExactRational: return rational().str();
        case ScalarKind::InexactReal: return real().str();
        case ScalarKind::InexactComplex:
            return complex().re.str() + (complex().im.is_negative() ? "" : "+") + complex().im.str() + "i";
    }
    return {};
}

namespace {

// Promote both operands to a common representation: exact stays exact only
// when both are exact; otherwise widen to real/complex at max precision.
enum class Level { Rat, Re, Cx };

Level level(const Scalar& s) {
    switch (s.kind()) {
        case ScalarKind::ExactRational: return Level::Rat;
        case ScalarKind::InexactReal: return Level::Re;
        case ScalarKind::InexactComplex: return Level::Cx;
    }
    return Level::Rat;
}

Complex to_complex(const Scalar& s, long bits) {
    if (s.kind() == ScalarKind::InexactComplex) return s.complex();
    return {s.to_real(bits), Real(bits)};
}

template <typename F, typename G, typename H>
Scalar binary(const Scalar& a, const Scalar& b, F frat, G freal, H fcx) {
    Level la = level(a), lb = level(b);
    Level l = std::max(la, lb);
    if (l == Level::Rat) return Scalar(frat(a.rational(), b.rational()));
    long bits = std::max({a.precision(), b.precision(), 64L});
    if (l == Level::Re) return Scalar(freal(a.to_real(bits), b.to_real(bits)));
    return Scalar(fcx(to_complex(a, bits), to_complex(b, bits)));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](auto& x, auto& y) { return x + y; },
                  [](auto x, auto y) { return x + y; }, [](auto x, auto y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](auto& x, auto& y) { return x - y; },
                  [](auto x, auto y) { return x - y; }, [](auto x, auto y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](auto& x, auto& y) { return x * y; },
                  [](auto x, auto y) { return x * y; }, [](auto x, auto y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero("scalar division by zero");
    return binary(a, b, [](auto& x, auto& y) { return x / y; },
                  [](auto x, auto y) { return x / y; }, [](auto x, auto y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.kind() == ScalarKind::ExactRational && b.kind() == ScalarKind::ExactRational)
        return a.rational() == b.rational();
    if (a.kind() == ScalarKind::InexactComplex || b.kind() == ScalarKind::InexactComplex) {
        long bits = std::max({a.precision(), b.precision(), 64L});
        Complex x = to_complex(a, bits), y = to_complex(b, bits);
        return x.re == y.re && x.im == y.im;
    }
    long bits = std::max({a.precision(), b.precision(), 64L});
    return a.to_real(bits) == b.to_real(bits);
}

Scalar rat_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::Add: return a + b;
        case ScalarOp::Sub: return a - b;
        case ScalarOp::Mul: return a * b;
        case ScalarOp::Div: return a / b;
    }
    throw InternalError("unreachable scalar op");
}

Scalar parse_scalar(const std::string& text, long bits) {
    bool decimal = text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
                   text.find('E') != std::string::npos;
    if (!decimal) {
        if (auto q = Rational::parse(text)) return Scalar(*q);
        throw DomainError("cannot parse scalar: " + text);
    }
    return Scalar(Real(text, bits));
}

}  // namespace painleve
