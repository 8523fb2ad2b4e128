#pragma once

#include <string>
#include <vector>

#include "painleve/precision.hpp"

namespace painleve {

/// Moments mu_0..mu_{2N} of the quartic weight exp(-x^4/4 + t x^2) on R.
/// Odd moments vanish identically; mu_0 and mu_2 come from tanh-sinh
/// quadrature with a certified truncation bound, the remaining even moments
/// from the exact-coefficient recursion mu_{k+3} = k mu_{k-1} + 2t mu_{k+1}.
struct MomentTable {
    Real t;
    int N;
    long bits;
    std::vector<Real> mu;  // indices 0..2N
};

MomentTable compute_moments(const Real& t, int N, const PrecisionContext& ctx);

/// Direct quadrature of a single moment integral (no recursion); used as an
/// independent cross-check of the recursion.
Real moment_by_quadrature(const Real& t, int k, const PrecisionContext& ctx);

/// Gauss weight exp(-x^2/2) moment table (Hermite sanity hook, test use).
MomentTable hermite_moments(int N, const PrecisionContext& ctx);

/// Hankel determinant Delta_n = det(mu_{i+j}), 0 <= i,j <= n-1, computed at
/// twice the working precision then rounded back.
Real hankel_det(const MomentTable& m, int n);

struct OrthoData {
    std::vector<Real> delta;   // delta[n] = Delta_n for 0..N (Delta_0 = 1)
    std::vector<Real> norm;    // norm[n] = h_n = Delta_{n+1}/Delta_n, 0..N-1
    std::vector<Real> lambda;  // lambda[n] valid for 2..N-1
    long bits;
};

/// Recurrence coefficients lambda_n = Delta_n Delta_{n-2} / Delta_{n-1}^2
/// for the monic three-term recurrence with c_n = 0.
OrthoData lambda_coeffs(const MomentTable& m);

/// Candidate right-hand sides for the string equation
///   lambda_{n+2}(lambda_{n+1}+lambda_{n+2}+lambda_{n+3}) = RHS(n).
enum class StringForm {
    PrintedN_LamN,       // n   + 2t lambda_n      (as printed)
    NPlus1_LamNPlus2,    // n+1 + 2t lambda_{n+2}
    NPlus2_LamNPlus2,    // n+2 + 2t lambda_{n+2}
    N_LamNPlus2,         // n   + 2t lambda_{n+2}
    NPlus1_LamN,         // n+1 + 2t lambda_n
};

std::string string_form_label(StringForm f);

struct StringResolution {
    StringForm adopted;
    std::vector<std::pair<StringForm, Real>> max_rel_residual;  // per candidate
};

/// Empirical index resolution: evaluates every candidate over the index
/// range and adopts the one whose relative residual sits at rounding level.
StringResolution resolve_string_form(const OrthoData& d, const Real& t, int nmin, int nmax);

/// LHS - RHS for the chosen form; n must leave lambda_{n+3} in range.
Real string_residual(const OrthoData& d, const Real& t, int n, StringForm form);
/// Residual scaled by |LHS|.
Real string_residual_relative(const OrthoData& d, const Real& t, int n, StringForm form);

}  // namespace painleve
