#pragma once

#include <optional>
#include <string>
#include <vector>

#include "painleve/errors.hpp"
#include "painleve/precision.hpp"

namespace painleve {

enum class OdeId { P1, P2, P3, P4, P5, P6, NY, P1Auto };

std::string ode_name(OdeId id);

/// System id plus its parameter vector: P1 none, P2 (alpha), P3/P5/P6
/// (alpha,beta,gamma,delta), P4 (alpha,beta), NY (gamma0,gamma1,gamma2),
/// P1Auto (g2). Arity is validated at construction.
struct ODESpec {
    OdeId id;
    std::vector<Real> params;

    ODESpec(OdeId id_, std::vector<Real> p);
    int dimension() const { return id == OdeId::NY ? 3 : 2; }
};

/// Left side minus right side of the printed equation at (t, w, w', w'').
/// Signals DomainError naming the vanishing factor on singular input.
/// Not defined for the NY system (use ny_sum_residual / integrate).
Real residual(const ODESpec& spec, const Real& t, const Real& w, const Real& wp, const Real& wpp);

/// f0 + f1 + f2 - t, the conserved affine constraint of the NY flow.
Real ny_sum_residual(const Real& t, const std::vector<Real>& f);

struct StepSample {
    Real t;
    std::vector<Real> y;
    Real err;  // local error estimate of the step that produced this sample
    bool pole_event = false;
};

struct ODETrajectory {
    std::vector<StepSample> samples;
    bool pole_flagged = false;
    long accepted = 0, rejected = 0;
};

struct StiffnessError : Error {
    Real t_last;
    std::vector<Real> y_last;
    StiffnessError(Real t, std::vector<Real> y, const std::string& what)
        : Error(what), t_last(std::move(t)), y_last(std::move(y)) {}
};

struct IntegrateOptions {
    std::optional<Real> fixed_step;        // disables adaptivity when set
    std::vector<Real> checkpoints;         // times the stepper must hit exactly
    std::optional<Real> pole_threshold;    // default tol^(-1/4)
};

/// Adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) at context precision.
/// Integration halts with a pole-flag event when a solution component
/// exceeds the pole threshold; step-size underflow raises StiffnessError
/// carrying the last good state.
ODETrajectory integrate(const ODESpec& spec, std::vector<Real> y0, const Real& t0, const Real& t1,
                        const Real& tol, const PrecisionContext& ctx, IntegrateOptions opts = {});

/// (y')^2 - 4y^3 - g2*y - g3
Real weierstrass_invariant(const Real& y, const Real& yp, const Real& g2, const Real& g3);

/// Movable double pole expansion of P1: w = sum_{j>=0} a_j tau^{j-2},
/// tau = t - t0, a_0 = 1, resonance at j = 6 carries the free parameter h.
struct LaurentSeries {
    Real t0, h;
    std::vector<Real> a;  // a_0 .. a_M
};

LaurentSeries laurent_p1(const Real& t0, const Real& h, int M, const PrecisionContext& ctx);
Real laurent_eval(const LaurentSeries& s, const Real& t);

/// Fits (t0, h) so the truncated series passes through two samples near the
/// pole (Newton iteration, finite-difference Jacobian at full precision).
LaurentSeries fit_p1_pole(const Real& ta, const Real& wa, const Real& tb, const Real& wb,
                          const Real& t0_guess, int M, const PrecisionContext& ctx);

/// NY trajectory point mapped to the P4 frame: given (s, f, gamma) returns
/// (t, w, w', w'') with w(t) = -sqrt2 f1(sqrt2 t); P4 parameters are
/// alpha = gamma0 - gamma2 and beta^2 = 4 gamma1^2.
struct P4Point {
    Real t, w, wp, wpp;
};

P4Point ny_to_p4(const Real& s, const std::vector<Real>& f, const std::vector<Real>& gamma,
                 const PrecisionContext& ctx);

}  // namespace painleve
