#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "painleve/rational.hpp"
#include "painleve/scalar.hpp"
#include "painleve/univar.hpp"

namespace painleve {

/// Bivariate polynomial over the rationals: sparse map from (deg_x, deg_y)
/// to nonzero exact-rational coefficients. Degrees are recomputed on demand.
class BivarPoly {
  public:
    using Key = std::pair<int, int>;

    BivarPoly() = default;
    static BivarPoly constant(Rational c);
    static BivarPoly var_x();
    static BivarPoly var_y();
    static BivarPoly monomial(Rational c, int dx, int dy);

    bool is_zero() const { return c_.empty(); }
    int degree_x() const;
    int degree_y() const;
    int total_degree() const;
    /// Minimal total degree of a term; the multiplicity at the origin.
    int origin_multiplicity() const;
    int min_exp_x() const;
    int min_exp_y() const;
    const std::map<Key, Rational>& terms() const { return c_; }

    Rational coeff(int dx, int dy) const;
    void set_coeff(int dx, int dy, Rational c);

    Rational eval(const Rational& x, const Rational& y) const;
    Scalar eval(const Scalar& x, const Scalar& y) const;
    RatFunc eval(const RatFunc& x, const RatFunc& y) const;

    BivarPoly operator-() const;
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly operator*(const Rational& c) const;
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.c_ == b.c_; }

    /// Exact division by the monomial x^dx y^dy; every term must be
    /// divisible, otherwise ExactDivideError carries the offending term.
    BivarPoly exact_divide_monomial(int dx, int dy) const;

    /// p(x + a, y + b)
    BivarPoly translate(const Rational& a, const Rational& b) const;
    /// p(x*y, y) — blow-up chart with exceptional coordinate y
    BivarPoly subs_x_times_y() const;
    /// p(x, x*y) — blow-up chart with exceptional coordinate x
    BivarPoly subs_y_times_x() const;
    /// x^clear_deg * p(1/x, y); clear_deg >= degree_x
    BivarPoly reciprocal_x(int clear_deg) const;
    BivarPoly reciprocal_y(int clear_deg) const;
    BivarPoly swap_xy() const;

    /// Restriction to a line: p(x0, y) as a univariate in y / p(x, y0) in x.
    UnivarPoly at_x(const Rational& x0) const;
    UnivarPoly at_y(const Rational& y0) const;

    /// Coefficients as univariate polynomials in x, indexed by the y-power.
    std::vector<UnivarPoly> y_coefficients() const;

    std::string str() const;

  private:
    std::map<Key, Rational> c_;
};

enum class PolyOp { Add, Sub, Mul, ExactDivideMonomial };

/// Spec-level polynomial arithmetic entry point. For ExactDivideMonomial the
/// second operand must be a single monomial.
BivarPoly poly_arith(const BivarPoly& p, const BivarPoly& q, PolyOp op);

/// Resultant of A and B with respect to y, as a univariate polynomial in x.
/// Computed by interpolation at sample points that preserve leading degrees.
UnivarPoly resultant_y(const BivarPoly& a, const BivarPoly& b);

/// Parses expressions like "x^2*y^2 + x + y - 3/2*x*y" (sums of monomials).
BivarPoly parse_bivar(const std::string& text);

}  // namespace painleve
