#pragma once

#include <array>
#include <string>
#include <vector>

#include "painleve/scalar.hpp"

namespace painleve {

/// (gamma_0, gamma_1, gamma_2) with gamma_0+gamma_1+gamma_2 = 1 preserved by
/// every group action. The lattice coordinates alpha_j are identified with
/// gamma_j componentwise.
struct ParamTriple {
    std::array<Scalar, 3> g;

    Scalar sum() const { return g[0] + g[1] + g[2]; }
};

/// (f_0, f_1, f_2; t) with f_0+f_1+f_2 = t preserved by the actions.
struct FieldState {
    std::array<Scalar, 3> f;
    Scalar t;

    Scalar fsum() const { return f[0] + f[1] + f[2]; }
};

enum class Gen { S0, S1, S2, Pi, PiInv };

/// Free word over the generator alphabet; relations are theorems to test,
/// not normal forms. Words act on states left-to-right (index 0 first).
using WeylWord = std::vector<Gen>;

std::string gen_name(Gen g);

/// The two candidate pairings of +/- with j = i+1 / i-1 in
/// s_i(f_j) = f_j +- gamma_i/f_i. Standard is the one reproducing the
/// printed closed form of T; Flipped is kept for the bring-up test.
enum class FieldSignConvention { Standard, Flipped };

ParamTriple act_params(const WeylWord& w, ParamTriple p);

std::pair<FieldState, ParamTriple> act_fields(const WeylWord& w, FieldState s, ParamTriple p,
                                              FieldSignConvention conv = FieldSignConvention::Standard);

/// Translation T = pi s2 s1 and its inverse, applied via the generator word.
std::pair<FieldState, ParamTriple> translation_T(const FieldState& s, const ParamTriple& p);
std::pair<FieldState, ParamTriple> translation_T_inverse(const FieldState& s, const ParamTriple& p);

/// Closed forms of the translation: T(f1) = t - f0 - f1 - alpha0/f0 and
/// T^{-1}(f0) = t - f0 - f1 + alpha1/f1.
Scalar translation_T_f1_closed(const FieldState& s, const ParamTriple& p);
Scalar translation_T_inv_f0_closed(const FieldState& s, const ParamTriple& p);

/// Orbit of the difference system generated by T: x_n = T^n(f1), y_n = T^n(f0),
///   x_{n+1} = t - y_n - x_n - (alpha0 + n)/y_n
///   y_{n+1} = t - y_n - x_{n+1} + (alpha1 - (n+1))/x_{n+1}.
struct DpOrbit {
    std::vector<std::pair<Scalar, Scalar>> xy;  // (x_n, y_n), n = 0..steps
};

DpOrbit dp1_from_T(const Scalar& x0, const Scalar& y0, const Scalar& t, const Scalar& alpha0,
                   const Scalar& alpha1, int steps);

/// P4 Backlund pair: up is 2 w w_{n+1} = -w' - w^2 - 2tw + beta_n, down is
/// 2 w w_{n-1} = w' - w^2 - 2tw + beta_n.
Real backlund_p4_up(const Real& w, const Real& wp, const Real& t, const Real& beta_n);
Real backlund_p4_down(const Real& w, const Real& wp, const Real& t, const Real& beta_n);

/// Parameter sequences alpha_n = -n/2 - c0/2 + (3/2) c1 (-1)^n,
/// beta_n = n + c0 + c1 (-1)^n.
struct P4Ladder {
    Real c0, c1;

    Real alpha(long n) const;
    Real beta(long n) const;
};

}  // namespace painleve
