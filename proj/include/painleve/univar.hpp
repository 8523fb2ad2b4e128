#pragma once

#include <optional>
#include <string>
#include <vector>

#include "painleve/rational.hpp"

namespace painleve {

/// Dense univariate polynomial over the rationals. Coefficient i multiplies
/// x^i; the representation is normalized (no trailing zero coefficients).
class UnivarPoly {
  public:
    UnivarPoly() = default;
    explicit UnivarPoly(Rational c);
    explicit UnivarPoly(std::vector<Rational> coeffs);
    static UnivarPoly monomial(Rational c, int deg);
    static UnivarPoly variable();  // x

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    UnivarPoly derivative() const;
    UnivarPoly operator-() const;

    friend UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b);
    friend UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b);
    friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
    UnivarPoly operator*(const Rational& c) const;
    friend bool operator==(const UnivarPoly& a, const UnivarPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; returns {quotient, remainder}.
    std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& d) const;
    /// Monic gcd.
    static UnivarPoly gcd(UnivarPoly a, UnivarPoly b);

    /// Divides by (x - r); remainder must vanish.
    UnivarPoly deflate(const Rational& r) const;

    std::string str(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<Rational> c_;
};

struct RationalRoots {
    std::vector<Rational> roots;  // with multiplicity, sorted
    int residual_degree;          // degree left after removing rational roots
};

/// All rational roots (with multiplicity) via integer root bounds on the
/// primitive integer form, each candidate verified by exact substitution.
RationalRoots rational_roots(const UnivarPoly& p);

/// Resultant of two univariate polynomials (Sylvester determinant, exact).
Rational resultant(const UnivarPoly& a, const UnivarPoly& b);

/// Rational function over Q in one formal variable, reduced (gcd removed,
/// monic denominator). Used for singularity-confinement stepping in Q(eps).
class RatFunc {
  public:
    RatFunc() : num_(), den_(UnivarPoly(Rational(1))) {}
    RatFunc(Rational c) : num_(UnivarPoly(std::move(c))), den_(UnivarPoly(Rational(1))) {}
    RatFunc(UnivarPoly num, UnivarPoly den);
    static RatFunc variable();  // eps

    bool is_zero() const { return num_.is_zero(); }
    const UnivarPoly& num() const { return num_; }
    const UnivarPoly& den() const { return den_; }

    /// Value at eps = 0: finite rational or infinity (den(0) = 0 after
    /// reduction means a genuine pole; never 0/0 since reduced).
    struct Limit {
        bool at_infinity;
        Rational value;  // meaningful when !at_infinity
    };
    Limit at_zero() const;

    RatFunc operator-() const;
    RatFunc inverse() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    int complexity() const { return std::max(num_.degree(), den_.degree()); }

  private:
    UnivarPoly num_, den_;
};

}  // namespace painleve
