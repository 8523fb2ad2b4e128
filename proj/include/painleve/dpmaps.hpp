#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "painleve/elliptic.hpp"
#include "painleve/scalar.hpp"

namespace painleve {

struct DP1Params {
    Scalar a, b, c;
};

struct QP1Params {
    Scalar a, q;

    QP1Params(Scalar a_, Scalar q_);
    Scalar z(long n) const;  // a * q^n
};

struct ErcgParams {
    Real k;  // modulus
    Real gamma_e, gamma_o, omega;

    Real z(long n) const;      // (gamma_e + gamma_o) n + omega
    Real gamma(long n) const;  // gamma_e for even n, gamma_o for odd n
};

/// w_next from w (w_bar + w + w_under) = a n + b + c w.
Scalar step_dp1(const Scalar& w_prev, const Scalar& w, long n, const DP1Params& p);

/// w_next from w_bar w_under = 1/w - 1/(z w^2), z = a q^n.
Scalar step_qp1(const Scalar& w_prev, const Scalar& w, long n, const QP1Params& p);
/// Solves the same relation at index n for w_under.
Scalar step_qp1_backward(const Scalar& w_next, const Scalar& w, long n, const QP1Params& p);
/// Autonomous limit: w_next = 1/(w w_under).
Scalar step_qp1_auto(const Scalar& w_prev, const Scalar& w);

/// The three groups of the eRCG equation that multiply w_{n+1} (and, by the
/// n+1 <-> n-1 symmetry, w_{n-1}); exposed so tests can check autonomy.
struct ErcgCoefficients {
    Real c1;  // cn(g) dn(g) (1 - k^2 sn^4(z))
    Real c2;  // cn(z) dn(z) (1 - k^2 sn^2(z) sn^2(g))
    Real c3;  // (cn^2(z) - cn^2(g)) cn(z) dn(z)
};

ErcgCoefficients ercg_coefficients(long n, const ErcgParams& p, const PrecisionContext& ctx);

Real step_ercg(const Real& w_prev, const Real& w, long n, const ErcgParams& p,
               const PrecisionContext& ctx);
Real step_ercg_backward(const Real& w_next, const Real& w, long n, const ErcgParams& p,
                        const PrecisionContext& ctx);

/// K(x, y) = (x^2 y^2 + x + y)/(x y), exact on exact input.
Scalar K_invariant(const Scalar& x, const Scalar& y);

/// Defect K(w_bar, w) - K(w, w_under) = -(1/z) w (w_bar - w_under)/(w - 1/z)
/// for a qP1 step at parameter z. Signals BasePointProximity at w = 1/z.
Scalar K_defect(const Scalar& w_prev, const Scalar& w, const Scalar& w_next, const Scalar& z);

enum class MapId { Dp1, Qp1, Qp1Auto, Ercg };

std::string map_name(MapId id);

/// Projective value of a trajectory: finite scalar or the point at infinity.
struct TrajValue {
    bool infinite = false;
    Scalar v;

    static TrajValue inf() { return {true, Scalar(0)}; }
    static TrajValue fin(Scalar s) { return {false, std::move(s)}; }
};

enum class ChartKind { Affine, RecipX, RecipY, RecipXY, BlowupB0 };

std::string chart_name(ChartKind c);

/// Point on P1 x P1 (or one of its blow-up charts). For BlowupB0 the chart
/// is centered at (1/z, 0) with coordinates (u, Y): x = 1/z + u Y, y = Y.
struct SurfacePoint {
    ChartKind chart;
    Scalar c1, c2;
};

struct ChartSwitchEvent {
    long n;
    std::string from, to;
};

struct TrajectoryDiagnostic {
    long n;
    std::string reason;
};

struct TrajectoryPoint {
    long n;
    TrajValue w;
};

struct Trajectory {
    MapId map;
    std::vector<TrajectoryPoint> points;  // w_{n0} .. w_{n0+steps+1}
    std::vector<ChartSwitchEvent> chart_switches;
    std::optional<TrajectoryDiagnostic> diagnostic;
    std::vector<std::pair<std::string, std::string>> params_snapshot;

    /// State-space point (x, y) = (w_k, w_{k-1}) for the entry at index k > 0
    /// of points; chart chosen by which coordinates are infinite.
    SurfacePoint state_at(size_t k) const;
};

/// Seed placed on the exceptional line of the blow-up at b0 = (1/z_n, 0):
/// parameter u along the line, entering at iteration index n_entry.
struct B0ChartSeed {
    long n_entry;
    Scalar u;
};

using TrajectorySeed = std::variant<std::pair<Scalar, Scalar>, B0ChartSeed>;
using MapParams = std::variant<DP1Params, QP1Params, ErcgParams, std::monostate>;

struct TrajectoryOptions {
    long bits = 256;  // used for ercg and inexact seeds
};

/// Iterates the chosen map `steps` times from the seeds (w0, w1), producing
/// steps+2 values including the seeds. Exact qP1 runs continue through
/// infinities via the reciprocal charts and through b0 via its blow-up chart
/// (for chart seeds); unresolvable indeterminacies terminate the trajectory
/// with a diagnostic record. Chart switches are recorded.
Trajectory run_trajectory(MapId map, const TrajectorySeed& seed, long n0, long steps,
                          const MapParams& params, const TrajectoryOptions& opts = {});

struct ContourGrid {
    std::vector<Scalar> xs, ys;
    std::vector<std::vector<Scalar>> K;  // K[i][j] = K(xs[i], ys[j])
};

/// K values over the inclusive nx-by-ny grid on [x0,x1] x [y0,y1]; the grid
/// must not touch the axes x = 0, y = 0.
ContourGrid contour_grid(const Rational& x0, const Rational& x1, const Rational& y0,
                         const Rational& y1, int nx, int ny);

}  // namespace painleve
