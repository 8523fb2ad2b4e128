#include "painleve/quadrature.hpp"

#include <vector>

#include "painleve/errors.hpp"

namespace painleve {

QuadResult tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                     const PrecisionContext& ctx, const Real& target_abs_err) {
    const long wbits = ctx.bits + 64;  // guard digits
    const Real half = Real("0.5", wbits);
    const Real mid = (a + b) * half;
    const Real rad = (b - a) * half;
    const Real pi_half = Real::pi(wbits) * half;

    // Node t-range: the weight decays like exp(-pi/2 * exp(|t|)); saturate
    // once contributions fall below the target and the representable range.
    const Real two(2.0, wbits);
    Real ln_inv_eps = Real::from_long(ctx.bits + 64, wbits) * log(two);
    Real tmax = log((ln_inv_eps + Real(8.0, wbits)) / pi_half) + Real(1.0, wbits);

    auto node = [&](const Real& t, Real& x, Real& w) {
        Real u = pi_half * sinh(t);
        Real c = cosh(u);
        x = mid + rad * tanh(u);
        w = rad * pi_half * cosh(t) / (c * c);
    };

    // level 0: h = 1
    Real h(1.0, wbits);
    Real sum(wbits);
    {
        Real x(wbits), w(wbits);
        node(Real(wbits), x, w);
        sum = f(x) * w;
        long kmax = (tmax / h).to_long() + 1;
        for (long k = 1; k <= kmax; ++k) {
            Real tk = h * Real::from_long(k, wbits);
            node(tk, x, w);
            sum += f(x) * w;
            node(-tk, x, w);
            sum += f(x) * w;
        }
    }
    Real integral = sum * h;
    Real err = abs(integral) + Real(1.0, wbits);

    const int max_level = 14;
    for (int level = 1; level <= max_level; ++level) {
        h = h * half;
        // new nodes are the odd multiples of the halved step
        Real partial(wbits);
        long kmax = (tmax / h).to_long() + 1;
        for (long k = 1; k <= kmax; k += 2) {
            Real tk = h * Real::from_long(k, wbits);
            Real x(wbits), w(wbits);
            node(tk, x, w);
            partial += f(x) * w;
            node(-tk, x, w);
            partial += f(x) * w;
        }
        Real next = integral * half + partial * h;
        err = abs(next - integral);
        integral = next;
        if (err < target_abs_err) return {integral, err, level};
    }
    throw PrecisionError("tanh-sinh quadrature failed to reach target accuracy " +
                         target_abs_err.str(3) + " (achieved " + err.str(3) + ")");
}

}  // namespace painleve
