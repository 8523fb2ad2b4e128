#include "painleve/elliptic.hpp"

#include <vector>

#include "painleve/errors.hpp"

namespace painleve {

Modulus make_modulus(const Real& k) {
    long bits = k.precision();
    Real zero(bits), one(1.0, bits);
    if (k < zero || k > one) throw DomainError("modulus k must lie in [0, 1]");
    return {k, sqrt((one - k) * (one + k))};
}

JacobiTriple jacobi(const Real& u, const Modulus& k, const PrecisionContext& ctx) {
    const long wbits = ctx.bits + 32;
    Real one(1.0, wbits);

    if (k.k.is_zero()) return {sin(u), cos(u), one};
    if (k.k == one) {
        Real sech = one / cosh(u);
        return {tanh(u), sech, sech};
    }
    if (u.is_zero()) return {Real(wbits), one, one};

    // descending AGM scale, c_0 = k and b_0 = k' widened to working precision
    std::vector<Real> a{one};
    std::vector<Real> c{k.k + Real(wbits)};
    std::vector<Real> b{k.kprime + Real(wbits)};
    const Real stop = Real::pow2(-(ctx.bits + 16), wbits);
    int n = 0;
    while (abs(c[n]) > stop * a[n] && n < 64) {
        a.push_back((a[n] + b[n]) * Real("0.5", wbits));
        b.push_back(sqrt(a[n] * b[n]));
        c.push_back((a[n] - b[n]) * Real("0.5", wbits));
        ++n;
    }

    // backward amplitude recurrence (Abramowitz & Stegun 16.4)
    Real phi = pow_int(Real(2.0, wbits), n) * a[n] * u;
    Real phi_prev = phi;
    for (int i = n; i >= 1; --i) {
        Real s = c[i] / a[i] * sin(phi);
        if (s > one) s = one;
        if (s < -one) s = -one;
        phi_prev = phi;
        phi = (phi + asin(s)) * Real("0.5", wbits);
    }

    Real sn = sin(phi);
    Real cn = cos(phi);
    Real dn = cn / cos(phi_prev - phi);
    if (n == 0) dn = sqrt(one - (k.k * sn) * (k.k * sn));
    return {sn, cn, dn};
}

Real complete_K(const Modulus& k, const PrecisionContext& ctx) {
    const long wbits = ctx.bits + 32;
    Real one(1.0, wbits);
    if (k.k == one) throw DomainError("K(k) diverges logarithmically at k = 1");
    Real a = one, b = k.kprime + Real(wbits);
    const Real stop = Real::pow2(-(ctx.bits + 16), wbits);
    for (int i = 0; i < 64 && abs(a - b) > stop * a; ++i) {
        Real am = (a + b) * Real("0.5", wbits);
        b = sqrt(a * b);
        a = am;
    }
    return Real::pi(wbits) / (Real(2.0, wbits) * a);
}

}  // namespace painleve
