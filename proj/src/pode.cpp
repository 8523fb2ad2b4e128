#include "painleve/pode.hpp"

#include <algorithm>

#include "painleve/rational.hpp"

namespace painleve {

std::string ode_name(OdeId id) {
    switch (id) {
        case OdeId::P1: return "P1";
        case OdeId::P2: return "P2";
        case OdeId::P3: return "P3";
        case OdeId::P4: return "P4";
        case OdeId::P5: return "P5";
        case OdeId::P6: return "P6";
        case OdeId::NY: return "NY";
        case OdeId::P1Auto: return "P1auto";
    }
    return "?";
}

ODESpec::ODESpec(OdeId id_, std::vector<Real> p) : id(id_), params(std::move(p)) {
    size_t arity = 0;
    switch (id) {
        case OdeId::P1: arity = 0; break;
        case OdeId::P2: arity = 1; break;
        case OdeId::P3: arity = 4; break;
        case OdeId::P4: arity = 2; break;
        case OdeId::P5: arity = 4; break;
        case OdeId::P6: arity = 4; break;
        case OdeId::NY: arity = 3; break;
        case OdeId::P1Auto: arity = 1; break;
    }
    if (params.size() != arity)
        throw DomainError(ode_name(id) + " takes " + std::to_string(arity) + " parameters, got " +
                          std::to_string(params.size()));
}

namespace {

// Second derivative from the printed equations (right-hand sides).
Real second_derivative(const ODESpec& s, const Real& t, const Real& w, const Real& wp) {
    const long bits = std::max({t.precision(), w.precision(), wp.precision()});
    Real one(1.0, bits), two(2.0, bits), half = one / two;
    switch (s.id) {
        case OdeId::P1: return Real(6.0, bits) * w * w + t;
        case OdeId::P2: return two * w * w * w + t * w + s.params[0];
        case OdeId::P3: {
            if (w.is_zero()) throw DomainError("P3: w = 0");
            if (t.is_zero()) throw DomainError("P3: t = 0");
            const Real &al = s.params[0], &be = s.params[1], &ga = s.params[2], &de = s.params[3];
            return wp * wp / w - w / t + (al * w * w + be) / t + ga * w * w * w + de / w;
        }
        case OdeId::P4: {
            if (w.is_zero()) throw DomainError("P4: w = 0");
            const Real &al = s.params[0], &be = s.params[1];
            return wp * wp / (two * w) + Real(3.0, bits) * half * w * w * w +
                   Real(4.0, bits) * t * w * w + two * (t * t - al) * w - be * be / (two * w);
        }
        case OdeId::P5: {
            if (w.is_zero()) throw DomainError("P5: w = 0");
            if ((w - one).is_zero()) throw DomainError("P5: w = 1");
            if (t.is_zero()) throw DomainError("P5: t = 0");
            const Real &al = s.params[0], &be = s.params[1], &ga = s.params[2], &de = s.params[3];
            Real wm1 = w - one;
            return (one / (two * w) + one / wm1) * wp * wp - wp / t +
                   wm1 * wm1 / (t * t * w) * (al * w * w + be) + ga * w / t +
                   de * w * (w + one) / wm1;
        }
        case OdeId::P6: {
            if (w.is_zero()) throw DomainError("P6: w = 0");
            if ((w - one).is_zero()) throw DomainError("P6: w = 1");
            if ((w - t).is_zero()) throw DomainError("P6: w = t");
            if (t.is_zero() || (t - one).is_zero()) throw DomainError("P6: t in {0, 1}");
            const Real &al = s.params[0], &be = s.params[1], &ga = s.params[2], &de = s.params[3];
            Real wm1 = w - one, wmt = w - t, tm1 = t - one;
            Real quad = half * (one / w + one / wm1 + one / wmt) * wp * wp;
            Real lin = (one / t + one / tm1 + one / wmt) * wp;
            Real pre = w * wm1 * wmt / (t * t * tm1 * tm1);
            Real par = al + be * t / (w * w) + ga * tm1 / (wm1 * wm1) + de * t * tm1 / (wmt * wmt);
            return quad - lin + pre * par;
        }
        case OdeId::P1Auto: return Real(6.0, bits) * w * w - s.params[0] * half;
        case OdeId::NY: throw DomainError("NY has no scalar second-derivative form");
    }
    throw InternalError("unreachable ode id");
}

std::vector<Real> rhs(const ODESpec& s, const Real& t, const std::vector<Real>& y) {
    if (s.id == OdeId::NY) {
        const Real &f0 = y[0], &f1 = y[1], &f2 = y[2];
        return {f0 * (f1 - f2) + s.params[0], f1 * (f2 - f0) + s.params[1],
                f2 * (f0 - f1) + s.params[2]};
    }
    return {y[1], second_derivative(s, t, y[0], y[1])};
}

}  // namespace

Real residual(const ODESpec& spec, const Real& t, const Real& w, const Real& wp, const Real& wpp) {
    return wpp - second_derivative(spec, t, w, wp);
}

Real ny_sum_residual(const Real& t, const std::vector<Real>& f) {
    return f[0] + f[1] + f[2] - t;
}

namespace {

struct DP5 {
    // Dormand-Prince 5(4) tableau at the requested precision.
    std::vector<Real> c;
    std::vector<std::vector<Real>> a;
    std::vector<Real> b5, b4;

    explicit DP5(long bits) {
        auto R = [bits](long num, long den) { return Real(Rational(num, den), bits); };
        c = {R(0, 1), R(1, 5), R(3, 10), R(4, 5), R(8, 9), R(1, 1), R(1, 1)};
        a = {
            {},
            {R(1, 5)},
            {R(3, 40), R(9, 40)},
            {R(44, 45), R(-56, 15), R(32, 9)},
            {R(19372, 6561), R(-25360, 2187), R(64448, 6561), R(-212, 729)},
            {R(9017, 3168), R(-355, 33), R(46732, 5247), R(49, 176), R(-5103, 18656)},
            {R(35, 384), R(0, 1), R(500, 1113), R(125, 192), R(-2187, 6784), R(11, 84)},
        };
        b5 = {R(35, 384), R(0, 1), R(500, 1113), R(125, 192), R(-2187, 6784), R(11, 84), R(0, 1)};
        b4 = {R(5179, 57600), R(0, 1), R(7571, 16695), R(393, 640), R(-92097, 339200), R(187, 2100), R(1, 40)};
    }
};

}  // namespace

ODETrajectory integrate(const ODESpec& spec, std::vector<Real> y0, const Real& t0, const Real& t1,
                        const Real& tol, const PrecisionContext& ctx, IntegrateOptions opts) {
    const long bits = ctx.bits;
    if (spec.id == OdeId::P6) {
        Real lo = min(t0, t1), hi = max(t0, t1);
        Real zero(bits), one(1.0, bits);
        if ((lo <= zero && hi >= zero) || (lo <= one && hi >= one))
            throw DomainError("P6 span must not touch the fixed singularities t = 0, 1");
    }
    if (static_cast<int>(y0.size()) != spec.dimension())
        throw DomainError("initial state dimension mismatch");

    const DP5 tab(bits);
    const int dir = t1 > t0 ? 1 : -1;
    Real dir_r = Real::from_long(dir, bits);
    Real span = abs(t1 - t0);
    Real pole_thresh = opts.pole_threshold.value_or(
        exp(-log(tol) / Real(4.0, bits)));  // tol^(-1/4)
    Real hmin = span * Real::pow2(-(bits / 2), bits);
    Real one(1.0, bits), fifth = one / Real(5.0, bits);

    std::vector<Real> checkpoints = opts.checkpoints;
    std::sort(checkpoints.begin(), checkpoints.end(),
              [&](const Real& a, const Real& b) { return dir > 0 ? a < b : a > b; });
    size_t next_cp = 0;

    ODETrajectory traj;
    Real t = t0 + Real(bits);
    std::vector<Real> y = y0;
    traj.samples.push_back({t, y, Real(bits), false});

    Real h = opts.fixed_step ? abs(*opts.fixed_step) : span / Real(64.0, bits);

    const int max_steps = 2000000;
    for (int step = 0; step < max_steps; ++step) {
        if (dir > 0 ? t >= t1 : t <= t1) break;

        Real h_eff = min(h, abs(t1 - t));
        while (next_cp < checkpoints.size() && (dir > 0 ? checkpoints[next_cp] <= t : checkpoints[next_cp] >= t))
            ++next_cp;
        if (next_cp < checkpoints.size()) h_eff = min(h_eff, abs(checkpoints[next_cp] - t));

        // stages
        std::vector<std::vector<Real>> k(7);
        bool stage_fail = false;
        try {
            k[0] = rhs(spec, t, y);
            for (int s = 1; s < 7; ++s) {
                std::vector<Real> ys = y;
                for (size_t i = 0; i < y.size(); ++i) {
                    Real acc(bits);
                    for (int j = 0; j < s; ++j) acc += tab.a[s][j] * k[j][i];
                    ys[i] = y[i] + dir_r * h_eff * acc;
                }
                k[s] = rhs(spec, t + dir_r * h_eff * tab.c[s], ys);
            }
        } catch (const DomainError&) {
            stage_fail = true;  // stepped into a singular denominator; shrink
        }

        Real errnorm(bits);
        std::vector<Real> y5;
        if (!stage_fail) {
            y5 = y;
            for (size_t i = 0; i < y.size(); ++i) {
                Real acc5(bits), acc4(bits);
                for (int j = 0; j < 7; ++j) {
                    acc5 += tab.b5[j] * k[j][i];
                    acc4 += tab.b4[j] * k[j][i];
                }
                y5[i] = y[i] + dir_r * h_eff * acc5;
                Real e = h_eff * abs(acc5 - acc4);
                Real sc = tol * (one + abs(y[i]));
                errnorm = max(errnorm, e / sc);
            }
        }

        bool accept = !stage_fail && (opts.fixed_step.has_value() || errnorm <= one);
        if (accept) {
            t = t + dir_r * h_eff;
            y = y5;
            ++traj.accepted;
            // pole detection watches the solution component w (double poles
            // make |w| ~ tau^-2 cross the threshold while the local error is
            // still controlled); the NY flow has no distinguished component
            bool pole = false;
            if (spec.id == OdeId::NY) {
                for (const Real& yi : y)
                    if (abs(yi) > pole_thresh) pole = true;
            } else if (abs(y[0]) > pole_thresh) {
                pole = true;
            }
            traj.samples.push_back({t, y, errnorm * tol, pole});
            if (pole) {
                traj.pole_flagged = true;
                break;
            }
        } else {
            ++traj.rejected;
        }

        if (!opts.fixed_step) {
            Real fac;
            if (stage_fail)
                fac = Real("0.25", bits);
            else {
                // 0.9 * errnorm^(-1/5), clamped
                Real grow = errnorm.is_zero() ? Real(5.0, bits)
                                              : Real("0.9", bits) * exp(-log(errnorm) * fifth);
                fac = max(Real("0.2", bits), min(Real(5.0, bits), grow));
            }
            h = h * fac;
            if (h < hmin) throw StiffnessError(t, y, "step size underflow (stiffness or pole) at t = " + t.str(8));
        } else if (stage_fail) {
            throw StiffnessError(t, y, "fixed-step stage hit a singular denominator at t = " + t.str(8));
        }
    }
    return traj;
}

Real weierstrass_invariant(const Real& y, const Real& yp, const Real& g2, const Real& g3) {
    return yp * yp - Real(4.0, y.precision()) * y * y * y - g2 * y - g3;
}

LaurentSeries laurent_p1(const Real& t0, const Real& h, int M, const PrecisionContext& ctx) {
    if (M < 7) throw DomainError("laurent_p1 requires M >= 7");
    const long bits = ctx.bits;
    LaurentSeries s{t0 + Real(bits), h + Real(bits), {}};
    s.a.assign(M + 1, Real(bits));
    s.a[0] = Real(1.0, bits);
    // a_1 = a_2 = a_3 = 0 forced; resonance slot j = 6 carries h
    s.a[4] = -t0 / Real(10.0, bits);
    s.a[5] = Real(Rational(-1, 6), bits);
    s.a[6] = h + Real(bits);
    for (int m = 7; m <= M; ++m) {
        Real conv(bits);
        for (int i = 1; i <= m - 1; ++i) conv += s.a[i] * s.a[m - i];
        s.a[m] = Real(6.0, bits) * conv / Real::from_long((m - 6) * (m + 1), bits);
    }
    return s;
}

Real laurent_eval(const LaurentSeries& s, const Real& t) {
    const long bits = std::max(t.precision(), s.t0.precision());
    Real tau = t - s.t0;
    if (tau.is_zero()) throw DomainError("laurent_eval at the pole");
    Real acc(bits);
    for (auto it = s.a.rbegin(); it != s.a.rend(); ++it) acc = acc * tau + *it;
    return acc / (tau * tau);
}

LaurentSeries fit_p1_pole(const Real& ta, const Real& wa, const Real& tb, const Real& wb,
                          const Real& t0_guess, int M, const PrecisionContext& ctx) {
    const long bits = ctx.bits;
    Real t0 = t0_guess + Real(bits), h(bits);
    Real delta = Real::pow2(-(bits / 3), bits);
    auto F = [&](const Real& t0v, const Real& hv, Real& f1, Real& f2) {
        LaurentSeries s = laurent_p1(t0v, hv, M, ctx);
        f1 = laurent_eval(s, ta) - wa;
        f2 = laurent_eval(s, tb) - wb;
    };
    for (int it = 0; it < 80; ++it) {
        Real f1(bits), f2(bits);
        F(t0, h, f1, f2);
        Real f1a(bits), f2a(bits), f1b(bits), f2b(bits), f1c(bits), f2c(bits), f1d(bits), f2d(bits);
        F(t0 + delta, h, f1a, f2a);
        F(t0 - delta, h, f1b, f2b);
        F(t0, h + delta, f1c, f2c);
        F(t0, h - delta, f1d, f2d);
        Real two_delta = Real(2.0, bits) * delta;
        Real j11 = (f1a - f1b) / two_delta, j12 = (f1c - f1d) / two_delta;
        Real j21 = (f2a - f2b) / two_delta, j22 = (f2c - f2d) / two_delta;
        Real det = j11 * j22 - j12 * j21;
        if (det.is_zero()) throw PrecisionError("fit_p1_pole: singular Jacobian");
        Real dt0 = (f1 * j22 - f2 * j12) / det;
        Real dh = (f2 * j11 - f1 * j21) / det;
        t0 -= dt0;
        h -= dh;
        if (abs(dt0) + abs(dh) < Real::pow2(-(2 * bits / 3), bits)) break;
    }
    return laurent_p1(t0, h, M, ctx);
}

P4Point ny_to_p4(const Real& s, const std::vector<Real>& f, const std::vector<Real>& gamma,
                 const PrecisionContext& ctx) {
    const long bits = ctx.bits;
    const Real &f0 = f[0], &f1 = f[1], &f2 = f[2];
    Real f0p = f0 * (f1 - f2) + gamma[0];
    Real f1p = f1 * (f2 - f0) + gamma[1];
    Real f2p = f2 * (f0 - f1) + gamma[2];
    Real f1pp = f1p * (f2 - f0) + f1 * (f2p - f0p);
    Real sq2 = Real::sqrt2(bits);
    Real two(2.0, bits);
    return {s / sq2, -sq2 * f1, -two * f1p, -two * sq2 * f1pp};
}

}  // namespace painleve
