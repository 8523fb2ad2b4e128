#include <doctest.h>

#include <random>

#include "painleve/elliptic.hpp"
#include "painleve/errors.hpp"
#include "painleve/quadrature.hpp"
#include "painleve/rational.hpp"

using namespace painleve;

namespace {

Real rand_real(std::mt19937_64& rng, double lo, double hi, long bits) {
    std::uniform_real_distribution<double> d(lo, hi);
    return Real(d(rng), bits);
}

}  // namespace

TEST_SUITE("elliptic") {

TEST_CASE("quadrature warm-up: polynomial and gaussian") {
    PrecisionContext ctx(256);
    Real target = Real::pow2(-260, ctx.bits);
    auto q = tanh_sinh([](const Real& x) { return x * x; }, Real(ctx.bits), Real(1.0, ctx.bits), ctx,
                       target);
    CHECK(abs(q.value - Real(Rational(1, 3), ctx.bits)) < Real::pow2(-250, ctx.bits));

    // erf-style integral against sqrt(pi)/2 on a truncated interval
    auto g = tanh_sinh([](const Real& x) { return exp(-x * x); }, Real(ctx.bits), Real(30.0, ctx.bits),
                       ctx, target);
    Real expected = sqrt(Real::pi(ctx.bits)) / Real(2.0, ctx.bits);
    CHECK(abs(g.value - expected) < Real::pow2(-240, ctx.bits));
}

TEST_CASE("jacobi at u = 0 and trivial modulus values") {
    PrecisionContext ctx(256);
    Modulus k = make_modulus(Real("0.5", ctx.bits));
    JacobiTriple j = jacobi(Real(ctx.bits), k, ctx);
    CHECK(j.sn.is_zero());
    CHECK(j.cn == Real(1.0, j.cn.precision()));
    CHECK(j.dn == Real(1.0, j.dn.precision()));
}

TEST_CASE("degenerate moduli match closed forms to 8 eps") {
    PrecisionContext ctx(256);
    Real eps8 = Real(8.0, ctx.bits) * Real::epsilon(ctx.bits);
    std::mt19937_64 rng(101);
    Modulus k0 = make_modulus(Real(ctx.bits));
    Modulus k1 = make_modulus(Real(1.0, ctx.bits));
    for (int i = 0; i < 50; ++i) {
        Real u = rand_real(rng, -3.0, 3.0, ctx.bits);
        JacobiTriple t0 = jacobi(u, k0, ctx);
        CHECK(abs(t0.sn - sin(u)) < eps8);
        CHECK(abs(t0.cn - cos(u)) < eps8);
        CHECK(abs(t0.dn - Real(1.0, ctx.bits)) < eps8);
        JacobiTriple t1 = jacobi(u, k1, ctx);
        Real sech = Real(1.0, ctx.bits) / cosh(u);
        CHECK(abs(t1.sn - tanh(u)) < eps8);
        CHECK(abs(t1.cn - sech) < eps8);
        CHECK(abs(t1.dn - sech) < eps8);
    }
}

TEST_CASE("pythagorean identities over 1000 random (u, k)") {
    PrecisionContext ctx(256);
    Real one(1.0, ctx.bits);
    Real eps8 = Real(8.0, ctx.bits) * Real::epsilon(ctx.bits);
    std::mt19937_64 rng(20240812);
    for (int i = 0; i < 1000; ++i) {
        Real u = rand_real(rng, -8.0, 8.0, ctx.bits);
        Real kv = rand_real(rng, 0.0, 0.999, ctx.bits);
        Modulus k = make_modulus(kv);
        JacobiTriple t = jacobi(u, k, ctx);
        CHECK(abs(t.sn * t.sn + t.cn * t.cn - one) < eps8);
        CHECK(abs(t.dn * t.dn + kv * kv * t.sn * t.sn - one) < eps8);
    }
}

TEST_CASE("periodicity: u + 4K reproduces the triple within 32 eps") {
    PrecisionContext ctx(256);
    Real eps32 = Real(32.0, ctx.bits) * Real::epsilon(ctx.bits);
    std::mt19937_64 rng(5);
    for (double kv : {0.1, 0.5, 0.9}) {
        Modulus k = make_modulus(Real(kv, ctx.bits));
        Real period = Real(4.0, ctx.bits) * complete_K(k, ctx);
        for (int i = 0; i < 20; ++i) {
            Real u = rand_real(rng, -2.0, 2.0, ctx.bits);
            JacobiTriple a = jacobi(u, k, ctx);
            JacobiTriple b = jacobi(u + period, k, ctx);
            CHECK(abs(a.sn - b.sn) < eps32);
            CHECK(abs(a.cn - b.cn) < eps32);
            CHECK(abs(a.dn - b.dn) < eps32);
        }
    }
}

TEST_CASE("complete_K: closed value, divergence, quadrature oracle") {
    PrecisionContext ctx(256);
    Modulus k0 = make_modulus(Real(ctx.bits));
    Real half_pi = Real::pi(ctx.bits + 32) / Real(2.0, ctx.bits + 32);
    CHECK(abs(complete_K(k0, ctx) - half_pi) < Real::epsilon(ctx.bits + 8));

    CHECK_THROWS_AS(complete_K(make_modulus(Real(1.0, ctx.bits)), ctx), DomainError);

    // independent oracle: direct tanh-sinh quadrature of the defining integral
    Real kv("0.8", ctx.bits);
    Modulus k = make_modulus(kv);
    Real target = Real::pow2(-200, ctx.bits);
    auto integrand = [&](const Real& theta) {
        Real s = sin(theta);
        return Real(1.0, ctx.bits) / sqrt(Real(1.0, ctx.bits) - kv * kv * s * s);
    };
    auto q = tanh_sinh(integrand, Real(ctx.bits), Real::pi(ctx.bits) / Real(2.0, ctx.bits), ctx, target);
    CHECK(abs(complete_K(k, ctx) - q.value) < Real("1e-30", ctx.bits));
}

TEST_CASE("modulus domain checks") {
    CHECK_THROWS_AS(make_modulus(Real(-0.1, 128)), DomainError);
    CHECK_THROWS_AS(make_modulus(Real(1.5, 128)), DomainError);
    Modulus k = make_modulus(Real("0.6", 256));
    CHECK(abs(k.kprime - Real("0.8", 256)) < Real::epsilon(250));
}

}  // TEST_SUITE
