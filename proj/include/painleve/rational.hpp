#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace painleve {

/// Exact rational over arbitrary-precision integers. Always stored in lowest
/// terms with positive denominator (mpq canonical form).
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}
    Rational(long num, long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "num", "num/den". Returns nullopt on malformed input.
    static std::optional<Rational> parse(const std::string& s);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    std::string str() const;  // "num/den", or "num" when integral

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational pow(long e) const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  private:
    mpq_class q_;
};

}  // namespace painleve
