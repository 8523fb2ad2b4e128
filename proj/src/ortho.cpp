#include "painleve/ortho.hpp"

#include <vector>

#include "painleve/errors.hpp"
#include "painleve/quadrature.hpp"

namespace painleve {

namespace {

// Truncation radius R with exp(-R^4/4 + |t| R^2) * (1+R)^k below the target.
Real truncation_radius(const Real& t, int k, long bits) {
    Real R(4.0, bits);
    Real need = Real::from_long(bits + 80, bits) * log(Real(2.0, bits));
    for (int i = 0; i < 200; ++i) {
        Real decay = pow_int(R, 4) / Real(4.0, bits) - abs(t) * R * R -
                     Real::from_long(k + 1, bits) * log(R + Real(1.0, bits));
        if (decay > need) return R;
        R += Real("0.5", bits);
    }
    throw PrecisionError("no truncation radius found for quartic weight");
}

}  // namespace

Real moment_by_quadrature(const Real& t, int k, const PrecisionContext& ctx) {
    if (k % 2 == 1) return Real(ctx.bits);
    const long bits = ctx.bits;
    Real R = truncation_radius(t, k, bits);
    Real target = Real::pow2(-(bits + 20), bits);
    auto f = [&](const Real& x) { return pow_int(x, k) * exp(-pow_int(x, 4) / Real(4.0, bits) + t * x * x); };
    QuadResult q = tanh_sinh(f, Real(bits), R, ctx, target);
    return q.value * Real(2.0, bits);  // even integrand
}

MomentTable compute_moments(const Real& t, int N, const PrecisionContext& ctx) {
    if (N < 2) throw DomainError("compute_moments requires N >= 2");
    MomentTable m{t + Real(ctx.bits), N, ctx.bits, {}};
    m.mu.assign(2 * N + 1, Real(ctx.bits));
    m.mu[0] = moment_by_quadrature(t, 0, ctx);
    m.mu[2] = moment_by_quadrature(t, 2, ctx);
    Real two_t = Real(2.0, ctx.bits) * t;
    for (int k = 1; k + 3 <= 2 * N; k += 2)
        m.mu[k + 3] = Real::from_long(k, ctx.bits) * m.mu[k - 1] + two_t * m.mu[k + 1];
    return m;
}

MomentTable hermite_moments(int N, const PrecisionContext& ctx) {
    MomentTable m{Real(ctx.bits), N, ctx.bits, {}};
    m.mu.assign(2 * N + 1, Real(ctx.bits));
    // mu_0 = sqrt(2 pi), mu_{2m} = (2m-1) mu_{2m-2}
    m.mu[0] = sqrt(Real(2.0, ctx.bits) * Real::pi(ctx.bits));
    for (int k = 2; k <= 2 * N; k += 2) m.mu[k] = Real::from_long(k - 1, ctx.bits) * m.mu[k - 2];
    return m;
}

Real hankel_det(const MomentTable& m, int n) {
    if (n < 1 || n > m.N) throw DomainError("hankel_det index out of range");
    const long wbits = 2 * m.bits;  // determinant conditioning guard
    std::vector<std::vector<Real>> a(n, std::vector<Real>(n, Real(wbits)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.mu[i + j] + Real(wbits);

    Real det(1.0, wbits);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
        if (a[piv][col].is_zero()) return Real(m.bits);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < n; ++r) {
            Real f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det + Real(m.bits);  // round back to working precision
}

OrthoData lambda_coeffs(const MomentTable& m) {
    if (m.N < 4) throw DomainError("lambda_coeffs requires N >= 4");
    OrthoData d;
    d.bits = m.bits;
    d.delta.assign(m.N + 1, Real(m.bits));
    d.delta[0] = Real(1.0, m.bits);
    for (int n = 1; n <= m.N; ++n) d.delta[n] = hankel_det(m, n);
    d.norm.assign(m.N, Real(m.bits));
    for (int n = 0; n < m.N; ++n) d.norm[n] = d.delta[n + 1] / d.delta[n];
    d.lambda.assign(m.N, Real(m.bits));
    for (int n = 2; n < m.N; ++n) d.lambda[n] = d.delta[n] * d.delta[n - 2] / (d.delta[n - 1] * d.delta[n - 1]);
    return d;
}

std::string string_form_label(StringForm f) {
    switch (f) {
        case StringForm::PrintedN_LamN: return "n + 2t*lambda_n (printed)";
        case StringForm::NPlus1_LamNPlus2: return "(n+1) + 2t*lambda_{n+2}";
        case StringForm::NPlus2_LamNPlus2: return "(n+2) + 2t*lambda_{n+2}";
        case StringForm::N_LamNPlus2: return "n + 2t*lambda_{n+2}";
        case StringForm::NPlus1_LamN: return "(n+1) + 2t*lambda_n";
    }
    return "?";
}

namespace {

Real rhs_for(const OrthoData& d, const Real& t, int n, StringForm form) {
    Real two_t = Real(2.0, d.bits) * t;
    switch (form) {
        case StringForm::PrintedN_LamN: return Real::from_long(n, d.bits) + two_t * d.lambda[n];
        case StringForm::NPlus1_LamNPlus2: return Real::from_long(n + 1, d.bits) + two_t * d.lambda[n + 2];
        case StringForm::NPlus2_LamNPlus2: return Real::from_long(n + 2, d.bits) + two_t * d.lambda[n + 2];
        case StringForm::N_LamNPlus2: return Real::from_long(n, d.bits) + two_t * d.lambda[n + 2];
        case StringForm::NPlus1_LamN: return Real::from_long(n + 1, d.bits) + two_t * d.lambda[n];
    }
    throw InternalError("unreachable string form");
}

Real lhs_for(const OrthoData& d, int n) {
    return d.lambda[n + 2] * (d.lambda[n + 1] + d.lambda[n + 2] + d.lambda[n + 3]);
}

}  // namespace

Real string_residual(const OrthoData& d, const Real& t, int n, StringForm form) {
    if (n < 2 || n + 3 >= static_cast<int>(d.lambda.size()))
        throw DomainError("string_residual: lambda_{n+1}..lambda_{n+3} not all available");
    return lhs_for(d, n) - rhs_for(d, t, n, form);
}

Real string_residual_relative(const OrthoData& d, const Real& t, int n, StringForm form) {
    return abs(string_residual(d, t, n, form)) / abs(lhs_for(d, n));
}

StringResolution resolve_string_form(const OrthoData& d, const Real& t, int nmin, int nmax) {
    StringResolution res{StringForm::NPlus1_LamNPlus2, {}};
    const StringForm all[] = {StringForm::PrintedN_LamN, StringForm::NPlus1_LamNPlus2,
                              StringForm::NPlus2_LamNPlus2, StringForm::N_LamNPlus2,
                              StringForm::NPlus1_LamN};
    Real best(d.bits);
    bool first = true;
    for (StringForm f : all) {
        Real worst(d.bits);
        for (int n = nmin; n <= nmax; ++n) {
            Real r = string_residual_relative(d, t, n, f);
            if (r > worst) worst = r;
        }
        res.max_rel_residual.emplace_back(f, worst);
        if (first || worst < best) {
            best = worst;
            res.adopted = f;
            first = false;
        }
    }
    return res;
}

}  // namespace painleve
