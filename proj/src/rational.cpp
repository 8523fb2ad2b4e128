#include "painleve/rational.hpp"

#include "painleve/errors.hpp"

namespace painleve {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num);
    q_ /= mpq_class(den);
}

std::optional<Rational> Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rational(mpq_class(n));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational");
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    long k = e > 0 ? e : -e;
    Rational acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero("rational division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

}  // namespace painleve
