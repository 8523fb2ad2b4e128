#include "painleve/weyl.hpp"

#include "painleve/errors.hpp"

namespace painleve {

std::string gen_name(Gen g) {
    switch (g) {
        case Gen::S0: return "s0";
        case Gen::S1: return "s1";
        case Gen::S2: return "s2";
        case Gen::Pi: return "pi";
        case Gen::PiInv: return "pi^-1";
    }
    return "?";
}

namespace {

ParamTriple apply_param(Gen g, ParamTriple p) {
    switch (g) {
        case Gen::S0:
        case Gen::S1:
        case Gen::S2: {
            int i = static_cast<int>(g);
            ParamTriple out = p;
            out.g[i] = -p.g[i];
            out.g[(i + 1) % 3] = p.g[(i + 1) % 3] + p.g[i];
            out.g[(i + 2) % 3] = p.g[(i + 2) % 3] + p.g[i];
            return out;
        }
        case Gen::Pi: return {{p.g[1], p.g[2], p.g[0]}};
        case Gen::PiInv: return {{p.g[2], p.g[0], p.g[1]}};
    }
    throw InternalError("unreachable generator");
}

std::pair<FieldState, ParamTriple> apply_field(Gen g, FieldState s, ParamTriple p,
                                               FieldSignConvention conv) {
    switch (g) {
        case Gen::S0:
        case Gen::S1:
        case Gen::S2: {
            int i = static_cast<int>(g);
            if (s.f[i].is_zero() && !p.g[i].is_zero())
                throw PoleOfAction(i, "s_" + std::to_string(i) + " applied at a state with f_" +
                                          std::to_string(i) + " = 0");
            FieldState out = s;
            if (!p.g[i].is_zero()) {
                Scalar ratio = p.g[i] / s.f[i];
                int up = (i + 1) % 3, down = (i + 2) % 3;
                if (conv == FieldSignConvention::Standard) {
                    out.f[up] = s.f[up] + ratio;
                    out.f[down] = s.f[down] - ratio;
                } else {
                    out.f[up] = s.f[up] - ratio;
                    out.f[down] = s.f[down] + ratio;
                }
            }
            return {out, apply_param(g, p)};
        }
        case Gen::Pi: return {{{s.f[1], s.f[2], s.f[0]}, s.t}, apply_param(g, p)};
        case Gen::PiInv: return {{{s.f[2], s.f[0], s.f[1]}, s.t}, apply_param(g, p)};
    }
    throw InternalError("unreachable generator");
}

}  // namespace

ParamTriple act_params(const WeylWord& w, ParamTriple p) {
    for (Gen g : w) p = apply_param(g, p);
    return p;
}

std::pair<FieldState, ParamTriple> act_fields(const WeylWord& w, FieldState s, ParamTriple p,
                                              FieldSignConvention conv) {
    for (Gen g : w) {
        auto [ns, np] = apply_field(g, std::move(s), std::move(p), conv);
        s = std::move(ns);
        p = std::move(np);
    }
    return {s, p};
}

std::pair<FieldState, ParamTriple> translation_T(const FieldState& s, const ParamTriple& p) {
    static const WeylWord word{Gen::Pi, Gen::S2, Gen::S1};
    return act_fields(word, s, p);
}

std::pair<FieldState, ParamTriple> translation_T_inverse(const FieldState& s, const ParamTriple& p) {
    static const WeylWord word{Gen::S1, Gen::S2, Gen::PiInv};
    return act_fields(word, s, p);
}

Scalar translation_T_f1_closed(const FieldState& s, const ParamTriple& p) {
    if (s.f[0].is_zero()) throw PoleOfAction(0, "T(f1) closed form needs f0 != 0");
    return s.t - s.f[0] - s.f[1] - p.g[0] / s.f[0];
}

Scalar translation_T_inv_f0_closed(const FieldState& s, const ParamTriple& p) {
    if (s.f[1].is_zero()) throw PoleOfAction(1, "T^-1(f0) closed form needs f1 != 0");
    return s.t - s.f[0] - s.f[1] + p.g[1] / s.f[1];
}

DpOrbit dp1_from_T(const Scalar& x0, const Scalar& y0, const Scalar& t, const Scalar& alpha0,
                   const Scalar& alpha1, int steps) {
    DpOrbit orbit;
    orbit.xy.emplace_back(x0, y0);
    Scalar x = x0, y = y0;
    for (int n = 0; n < steps; ++n) {
        if (y.is_zero()) throw SingularStep(n, "dp1_from_T: y_n = 0");
        Scalar xn1 = t - y - x - (alpha0 + Scalar(n)) / y;
        if (xn1.is_zero()) throw SingularStep(n, "dp1_from_T: x_{n+1} = 0");
        Scalar yn1 = t - y - xn1 + (alpha1 - Scalar(n + 1)) / xn1;
        x = std::move(xn1);
        y = std::move(yn1);
        orbit.xy.emplace_back(x, y);
    }
    return orbit;
}

Real backlund_p4_up(const Real& w, const Real& wp, const Real& t, const Real& beta_n) {
    if (w.is_zero()) throw DivisionByZero("backlund_p4_up at w = 0");
    return (-wp - w * w - Real(2.0, w.precision()) * t * w + beta_n) / (Real(2.0, w.precision()) * w);
}

Real backlund_p4_down(const Real& w, const Real& wp, const Real& t, const Real& beta_n) {
    if (w.is_zero()) throw DivisionByZero("backlund_p4_down at w = 0");
    return (wp - w * w - Real(2.0, w.precision()) * t * w + beta_n) / (Real(2.0, w.precision()) * w);
}

Real P4Ladder::alpha(long n) const {
    long bits = std::max(c0.precision(), c1.precision());
    Real sn = (n % 2 == 0) ? Real(1.0, bits) : Real(-1.0, bits);
    return -Real::from_long(n, bits) / Real(2.0, bits) - c0 / Real(2.0, bits) +
           Real(3.0, bits) / Real(2.0, bits) * c1 * sn;
}

Real P4Ladder::beta(long n) const {
    long bits = std::max(c0.precision(), c1.precision());
    Real sn = (n % 2 == 0) ? Real(1.0, bits) : Real(-1.0, bits);
    return Real::from_long(n, bits) + c0 + c1 * sn;
}

}  // namespace painleve
