#include "painleve/dpmaps.hpp"

#include <algorithm>

#include "painleve/errors.hpp"

namespace painleve {

namespace {

Scalar scalar_pow(const Scalar& s, long n) {
    if (s.kind() == ScalarKind::ExactRational) return Scalar(s.rational().pow(n));
    Scalar acc(1);
    Scalar base = n >= 0 ? s : s.inverse();
    long k = n >= 0 ? n : -n;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

}  // namespace

QP1Params::QP1Params(Scalar a_, Scalar q_) : a(std::move(a_)), q(std::move(q_)) {
    if (a.is_zero()) throw DomainError("qP1 requires a != 0");
    if (q.is_zero() || q == Scalar(1)) throw DomainError("qP1 requires q not in {0, 1}");
}

Scalar QP1Params::z(long n) const { return a * scalar_pow(q, n); }

Real ErcgParams::z(long n) const {
    long bits = std::max({gamma_e.precision(), gamma_o.precision(), omega.precision()});
    return (gamma_e + gamma_o) * Real::from_long(n, bits) + omega;
}

Real ErcgParams::gamma(long n) const { return (n % 2 == 0) ? gamma_e : gamma_o; }

Scalar step_dp1(const Scalar& w_prev, const Scalar& w, long n, const DP1Params& p) {
    if (w.is_zero()) throw SingularStep(n, "dP1 step at w = 0 (w_prev = " + w_prev.str() + ")");
    return (p.a * Scalar(n) + p.b + p.c * w) / w - w - w_prev;
}

Scalar step_qp1(const Scalar& w_prev, const Scalar& w, long n, const QP1Params& p) {
    Scalar zn = p.z(n);
    if (zn.is_zero()) throw SingularStep(n, "qP1 step with z = 0");
    if (w.is_zero()) throw SingularStep(n, "qP1 step at w = 0");
    if (w_prev.is_zero()) {
        if ((zn * w - Scalar(1)).is_zero())
            throw SingularStep(n, "qP1 step at the base point (w, w_under) = (1/z, 0)");
        throw SingularStep(n, "qP1 step at w_under = 0");
    }
    return (w.inverse() - (zn * w * w).inverse()) / w_prev;
}

Scalar step_qp1_backward(const Scalar& w_next, const Scalar& w, long n, const QP1Params& p) {
    Scalar zn = p.z(n);
    if (zn.is_zero()) throw SingularStep(n, "qP1 backward step with z = 0");
    if (w.is_zero()) throw SingularStep(n, "qP1 backward step at w = 0");
    if (w_next.is_zero()) throw SingularStep(n, "qP1 backward step at w_bar = 0");
    return (w.inverse() - (zn * w * w).inverse()) / w_next;
}

Scalar step_qp1_auto(const Scalar& w_prev, const Scalar& w) {
    if (w.is_zero() || w_prev.is_zero()) throw SingularStep(0, "autonomous qP1 step at zero value");
    return (w * w_prev).inverse();
}

ErcgCoefficients ercg_coefficients(long n, const ErcgParams& p, const PrecisionContext& ctx) {
    Modulus mod = make_modulus(p.k);
    JacobiTriple jz = jacobi(p.z(n), mod, ctx);
    JacobiTriple jg = jacobi(p.gamma(n), mod, ctx);
    long bits = ctx.bits + 32;
    Real one(1.0, bits);
    Real k2 = p.k * p.k;
    Real sz2 = jz.sn * jz.sn;
    Real sg2 = jg.sn * jg.sn;
    ErcgCoefficients c;
    c.c1 = jg.cn * jg.dn * (one - k2 * sz2 * sz2);
    c.c2 = jz.cn * jz.dn * (one - k2 * sz2 * sg2);
    c.c3 = (jz.cn * jz.cn - jg.cn * jg.cn) * jz.cn * jz.dn;
    return c;
}

namespace {

// Collect the three linear-in-w_next groups of the eRCG equation and solve:
//   c1 w (w_next + w_prev) - c2 (w_next w_prev + w^2) + c3 (1 + k^2 w^2 w_next w_prev) = 0
Real ercg_solve(const Real& w_prev, const Real& w, long n, const ErcgParams& p,
                const PrecisionContext& ctx) {
    ErcgCoefficients c = ercg_coefficients(n, p, ctx);
    Real k2 = p.k * p.k;
    Real denom = c.c1 * w - c.c2 * w_prev + c.c3 * k2 * w * w * w_prev;
    if (denom.is_zero())
        throw IndeterminateStep(n,
                                "c1=" + c.c1.str(10) + " c2=" + c.c2.str(10) + " c3=" + c.c3.str(10),
                                "eRCG leading coefficient vanished");
    Real numer = c.c2 * w * w - c.c1 * w * w_prev - c.c3;
    return numer / denom;
}

}  // namespace

Real step_ercg(const Real& w_prev, const Real& w, long n, const ErcgParams& p,
               const PrecisionContext& ctx) {
    return ercg_solve(w_prev, w, n, p, ctx);
}

Real step_ercg_backward(const Real& w_next, const Real& w, long n, const ErcgParams& p,
                        const PrecisionContext& ctx) {
    // the equation is symmetric under w_{n+1} <-> w_{n-1}
    return ercg_solve(w_next, w, n, p, ctx);
}

Scalar K_invariant(const Scalar& x, const Scalar& y) {
    if (x.is_zero() || y.is_zero()) throw DivisionByZero("K(x, y) needs x, y != 0");
    return (x * x * y * y + x + y) / (x * y);
}

Scalar K_defect(const Scalar& w_prev, const Scalar& w, const Scalar& w_next, const Scalar& z) {
    if (z.is_zero()) throw DivisionByZero("K_defect needs z != 0");
    if (w.is_zero()) throw DivisionByZero("K_defect needs w != 0");
    Scalar winv_z = w - z.inverse();
    if (winv_z.is_zero())
        throw BasePointProximity("K_defect at w = 1/z (base point b0)");
    return -(z.inverse()) * w * (w_next - w_prev) / winv_z;
}

std::string map_name(MapId id) {
    switch (id) {
        case MapId::Dp1: return "dp1";
        case MapId::Qp1: return "qp1";
        case MapId::Qp1Auto: return "qp1-auto";
        case MapId::Ercg: return "ercg";
    }
    return "?";
}

std::string chart_name(ChartKind c) {
    switch (c) {
        case ChartKind::Affine: return "affine";
        case ChartKind::RecipX: return "recip-x";
        case ChartKind::RecipY: return "recip-y";
        case ChartKind::RecipXY: return "recip-xy";
        case ChartKind::BlowupB0: return "blowup-b0";
    }
    return "?";
}

SurfacePoint Trajectory::state_at(size_t k) const {
    if (k == 0 || k >= points.size()) throw DomainError("state_at needs 1 <= k < size");
    const TrajValue& x = points[k].w;
    const TrajValue& y = points[k - 1].w;
    if (!x.infinite && !y.infinite) return {ChartKind::Affine, x.v, y.v};
    if (x.infinite && !y.infinite) return {ChartKind::RecipX, Scalar(0), y.v};
    if (!x.infinite && y.infinite) return {ChartKind::RecipY, x.v, Scalar(0)};
    return {ChartKind::RecipXY, Scalar(0), Scalar(0)};
}

namespace {

enum class StepClass { Regular, Indeterminate };

// One dz-aware projective step of qP1 (or its autonomous limit) on exact
// values: w_next = (z w - 1)/(z w^2 w_prev), infinities handled as limits on
// P1 x P1. Indeterminate exactly at the base point (1/z, 0) and at the two
// corners (0, inf), (inf, 0) of the (w, w_prev) square.
StepClass ext_step_qp1(const TrajValue& w_prev, const TrajValue& w, const std::optional<Scalar>& z,
                       TrajValue& out) {
    auto fin_nonzero = [](const TrajValue& t) { return !t.infinite && !t.v.is_zero(); };
    auto zero = [](const TrajValue& t) { return !t.infinite && t.v.is_zero(); };

    if (fin_nonzero(w) && fin_nonzero(w_prev)) {
        Scalar num = z ? (*z * w.v - Scalar(1)) : Scalar(1);
        Scalar den = z ? (*z * w.v * w.v * w_prev.v) : (w.v * w_prev.v);
        out = TrajValue::fin(num / den);
        return StepClass::Regular;
    }
    if (zero(w)) {
        if (w_prev.infinite) return StepClass::Indeterminate;  // corner (0, inf)
        out = TrajValue::inf();
        return StepClass::Regular;
    }
    if (w.infinite) {
        if (zero(w_prev)) return StepClass::Indeterminate;  // corner (inf, 0)
        out = TrajValue::fin(Scalar(0));
        return StepClass::Regular;
    }
    // w finite nonzero, w_prev zero or infinite
    if (w_prev.infinite) {
        out = TrajValue::fin(Scalar(0));
        return StepClass::Regular;
    }
    // w_prev = 0
    if (z && (*z * w.v - Scalar(1)).is_zero()) return StepClass::Indeterminate;  // b0
    out = TrajValue::inf();
    return StepClass::Regular;
}

ChartKind pair_chart(const TrajValue& x, const TrajValue& y) {
    if (!x.infinite && !y.infinite) return ChartKind::Affine;
    if (x.infinite && !y.infinite) return ChartKind::RecipX;
    if (!x.infinite && y.infinite) return ChartKind::RecipY;
    return ChartKind::RecipXY;
}

std::string traj_value_str(const TrajValue& t) { return t.infinite ? "inf" : t.v.str(); }

}  // namespace

Trajectory run_trajectory(MapId map, const TrajectorySeed& seed, long n0, long steps,
                          const MapParams& params, const TrajectoryOptions& opts) {
    if (steps < 1) throw DomainError("run_trajectory requires steps >= 1");
    Trajectory traj;
    traj.map = map;

    const DP1Params* dp = std::get_if<DP1Params>(&params);
    const QP1Params* qp = std::get_if<QP1Params>(&params);
    const ErcgParams* ep = std::get_if<ErcgParams>(&params);
    if (map == MapId::Dp1 && !dp) throw DomainError("dp1 needs DP1Params");
    if (map == MapId::Qp1 && !qp) throw DomainError("qp1 needs QP1Params");
    if (map == MapId::Ercg && !ep) throw DomainError("ercg needs ErcgParams");

    if (dp) {
        traj.params_snapshot = {{"a", dp->a.str()}, {"b", dp->b.str()}, {"c", dp->c.str()}};
    } else if (qp) {
        traj.params_snapshot = {{"a", qp->a.str()}, {"q", qp->q.str()}};
    } else if (ep) {
        traj.params_snapshot = {{"k", ep->k.str()},
                                {"gamma_e", ep->gamma_e.str()},
                                {"gamma_o", ep->gamma_o.str()},
                                {"omega", ep->omega.str()}};
    }

    // seed values
    TrajValue w_prev, w;
    long n_first = n0;
    if (const auto* pair = std::get_if<std::pair<Scalar, Scalar>>(&seed)) {
        w_prev = TrajValue::fin(pair->first);
        w = TrajValue::fin(pair->second);
        traj.points.push_back({n_first, w_prev});
        traj.points.push_back({n_first + 1, w});
    } else {
        const auto& b0 = std::get<B0ChartSeed>(seed);
        if (map != MapId::Qp1) throw DomainError("b0 chart seeds apply to qp1 only");
        Scalar zn = qp->z(b0.n_entry);
        n_first = b0.n_entry - 1;
        w_prev = TrajValue::fin(Scalar(0));
        w = TrajValue::fin(zn.inverse());
        traj.points.push_back({n_first, w_prev});
        traj.points.push_back({n_first + 1, w});
        traj.chart_switches.push_back({b0.n_entry, chart_name(ChartKind::Affine),
                                       chart_name(ChartKind::BlowupB0)});
        // lifted image of the exceptional-line point u: (x, y) -> (z^2 u, 1/z)
        TrajValue w_next = TrajValue::fin(zn * zn * b0.u);
        traj.chart_switches.push_back({b0.n_entry + 1, chart_name(ChartKind::BlowupB0),
                                       chart_name(ChartKind::Affine)});
        traj.points.push_back({b0.n_entry + 1, w_next});
        w_prev = w;
        w = w_next;
        steps -= 1;
    }

    ChartKind current_chart = pair_chart(w, w_prev);
    for (long k = 0; k < steps; ++k) {
        long n = traj.points.back().n;  // producing w_{n+1}
        TrajValue w_next;
        bool exact_pair = (!w.infinite ? w.v.is_exact() : true) &&
                          (!w_prev.infinite ? w_prev.v.is_exact() : true);
        try {
            switch (map) {
                case MapId::Dp1: {
                    if (w.infinite || w_prev.infinite)
                        throw SingularStep(n, "dP1 value escaped to infinity");
                    w_next = TrajValue::fin(step_dp1(w_prev.v, w.v, n, *dp));
                    break;
                }
                case MapId::Qp1:
                case MapId::Qp1Auto: {
                    std::optional<Scalar> z;
                    if (map == MapId::Qp1) z = qp->z(n);
                    if (exact_pair) {
                        StepClass cls = ext_step_qp1(w_prev, w, z, w_next);
                        if (cls == StepClass::Indeterminate) {
                            bool at_b0 = !w.infinite && !w_prev.infinite;
                            traj.diagnostic = {n + 1,
                                               at_b0 ? "indeterminate at base point b0 = (1/z, 0); "
                                                       "seed the blow-up chart to pass through"
                                                     : "indeterminate corner of P1 x P1 at (w, w_under) = (" +
                                                           traj_value_str(w) + ", " + traj_value_str(w_prev) + ")"};
                            return traj;
                        }
                    } else {
                        if (w.infinite || w_prev.infinite)
                            throw SingularStep(n, "inexact qP1 value escaped to infinity");
                        Scalar next = map == MapId::Qp1 ? step_qp1(w_prev.v, w.v, n, *qp)
                                                        : step_qp1_auto(w_prev.v, w.v);
                        // overflow policy: switch representation chart when
                        // |w| exceeds 2^(bits/2)
                        w_next = TrajValue::fin(next);
                        Real thr = Real::pow2(opts.bits / 2, opts.bits);
                        if (!next.is_exact() && abs(next.to_real(opts.bits)) > thr) {
                            traj.chart_switches.push_back(
                                {n + 1, chart_name(current_chart), chart_name(ChartKind::RecipX)});
                        }
                    }
                    break;
                }
                case MapId::Ercg: {
                    if (w.infinite || w_prev.infinite)
                        throw SingularStep(n, "eRCG value escaped to infinity");
                    PrecisionContext ctx(opts.bits);
                    Real r = step_ercg(w_prev.v.to_real(opts.bits), w.v.to_real(opts.bits), n, *ep, ctx);
                    w_next = TrajValue::fin(Scalar(r));
                    break;
                }
            }
        } catch (const IndeterminateStep& e) {
            traj.diagnostic = {n + 1, std::string(e.what()) + " [" + e.coefficients + "]"};
            return traj;
        } catch (const SingularStep& e) {
            traj.diagnostic = {n + 1, e.what()};
            return traj;
        } catch (const DivisionByZero& e) {
            traj.diagnostic = {n + 1, e.what()};
            return traj;
        }

        traj.points.push_back({n + 1, w_next});
        w_prev = w;
        w = w_next;
        ChartKind next_chart = pair_chart(w, w_prev);
        if (next_chart != current_chart) {
            traj.chart_switches.push_back({n + 1, chart_name(current_chart), chart_name(next_chart)});
            current_chart = next_chart;
        }
    }
    return traj;
}

ContourGrid contour_grid(const Rational& x0, const Rational& x1, const Rational& y0,
                         const Rational& y1, int nx, int ny) {
    if (nx < 1 || ny < 1) throw DomainError("contour_grid needs nx, ny >= 1");
    auto axis = [](const Rational& a, const Rational& b, int n) {
        std::vector<Rational> v;
        if (n == 1) {
            v.push_back(a);
            return v;
        }
        Rational h = (b - a) / Rational(n - 1);
        for (int i = 0; i < n; ++i) v.push_back(a + h * Rational(i));
        return v;
    };
    ContourGrid g;
    for (const Rational& x : axis(x0, x1, nx)) {
        if (x.is_zero()) throw DomainError("contour grid touches the axis x = 0");
        g.xs.emplace_back(x);
    }
    for (const Rational& y : axis(y0, y1, ny)) {
        if (y.is_zero()) throw DomainError("contour grid touches the axis y = 0");
        g.ys.emplace_back(y);
    }
    g.K.assign(g.xs.size(), std::vector<Scalar>(g.ys.size(), Scalar(0)));
    for (size_t i = 0; i < g.xs.size(); ++i)
        for (size_t j = 0; j < g.ys.size(); ++j) g.K[i][j] = K_invariant(g.xs[i], g.ys[j]);
    return g;
}

}  // namespace painleve
