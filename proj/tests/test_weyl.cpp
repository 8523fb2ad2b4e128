#include <doctest.h>

#include <random>

#include "painleve/errors.hpp"
#include "painleve/weyl.hpp"

using namespace painleve;

namespace {

Rational rand_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(rng), den(rng));
}

// Random state with generic entries: f sums forced to t, gamma sums to 1.
std::pair<FieldState, ParamTriple> random_state(std::mt19937_64& rng) {
    while (true) {
        Rational f0 = rand_rat(rng), f1 = rand_rat(rng), f2 = rand_rat(rng);
        Rational g0 = rand_rat(rng), g1 = rand_rat(rng);
        if (f0.is_zero() || f1.is_zero() || f2.is_zero()) continue;
        Rational g2 = Rational(1) - g0 - g1;
        if (g0.is_zero() || g1.is_zero() || g2.is_zero()) continue;
        FieldState s{{Scalar(f0), Scalar(f1), Scalar(f2)}, Scalar(f0 + f1 + f2)};
        ParamTriple p{{Scalar(g0), Scalar(g1), Scalar(g2)}};
        return {s, p};
    }
}

bool same_params(const ParamTriple& a, const ParamTriple& b) {
    return a.g[0] == b.g[0] && a.g[1] == b.g[1] && a.g[2] == b.g[2];
}

bool same_fields(const FieldState& a, const FieldState& b) {
    return a.f[0] == b.f[0] && a.f[1] == b.f[1] && a.f[2] == b.f[2] && a.t == b.t;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("generator actions on parameters") {
    ParamTriple p{{Scalar(1), Scalar(0), Scalar(0)}};
    ParamTriple r = act_params({Gen::S0}, p);
    CHECK(r.g[0] == Scalar(-1));
    CHECK(r.g[1] == Scalar(1));
    CHECK(r.g[2] == Scalar(1));

    ParamTriple q{{Scalar(Rational(1, 3)), Scalar(Rational(1, 2)), Scalar(Rational(1, 6))}};
    ParamTriple cyc = act_params({Gen::Pi}, q);
    CHECK(cyc.g[0] == q.g[1]);
    CHECK(cyc.g[1] == q.g[2]);
    CHECK(cyc.g[2] == q.g[0]);

    CHECK(same_params(act_params({Gen::S1, Gen::S1}, q), q));
    CHECK(same_params(act_params({Gen::Pi, Gen::PiInv}, q), q));
}

TEST_CASE("coxeter relations hold exactly on parameters") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        auto [s, p] = random_state(rng);
        for (Gen g : {Gen::S0, Gen::S1, Gen::S2}) CHECK(same_params(act_params({g, g}, p), p));
        // (s_i s_{i+1})^3 = 1
        const Gen gens[3] = {Gen::S0, Gen::S1, Gen::S2};
        for (int i = 0; i < 3; ++i) {
            Gen a = gens[i], b = gens[(i + 1) % 3];
            WeylWord w{a, b, a, b, a, b};
            CHECK(same_params(act_params(w, p), p));
        }
        CHECK(same_params(act_params({Gen::Pi, Gen::Pi, Gen::Pi}, p), p));
        // pi s_i = s_{i+1} pi
        for (int i = 0; i < 3; ++i) {
            CHECK(same_params(act_params({Gen::Pi, gens[i]}, p),
                              act_params({gens[(i + 1) % 3], Gen::Pi}, p)));
        }
    }
}

TEST_CASE("coxeter relations hold exactly on field states") {
    std::mt19937_64 rng(99);
    const Gen gens[3] = {Gen::S0, Gen::S1, Gen::S2};
    int done = 0;
    while (done < 100) {
        auto [s, p] = random_state(rng);
        try {
            for (int i = 0; i < 3; ++i) {
                auto [s2, p2] = act_fields({gens[i], gens[i]}, s, p);
                CHECK(same_fields(s2, s));
                CHECK(same_params(p2, p));
                Gen a = gens[i], b = gens[(i + 1) % 3];
                auto [s6, p6] = act_fields({a, b, a, b, a, b}, s, p);
                CHECK(same_fields(s6, s));
                CHECK(same_params(p6, p));
                auto [sp, pp] = act_fields({Gen::Pi, gens[i]}, s, p);
                auto [sq, pq] = act_fields({gens[(i + 1) % 3], Gen::Pi}, s, p);
                CHECK(same_fields(sp, sq));
                CHECK(same_params(pp, pq));
            }
            auto [s3, p3] = act_fields({Gen::Pi, Gen::Pi, Gen::Pi}, s, p);
            CHECK(same_fields(s3, s));
            CHECK(same_params(p3, p));
            ++done;
        } catch (const PoleOfAction&) {
            // intermediate pole; draw another state
        }
    }
}

TEST_CASE("gamma-sum and f-sum invariants preserved by every generator") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto [s, p] = random_state(rng);
        for (Gen g : {Gen::S0, Gen::S1, Gen::S2, Gen::Pi, Gen::PiInv}) {
            try {
                auto [s2, p2] = act_fields({g}, s, p);
                CHECK(p2.sum() == Scalar(1));
                CHECK(s2.fsum() == s2.t);
            } catch (const PoleOfAction&) {
            }
        }
    }
}

TEST_CASE("s_i with gamma_i = 0 leaves fields unchanged") {
    FieldState s{{Scalar(2), Scalar(3), Scalar(-1)}, Scalar(4)};
    ParamTriple p{{Scalar(Rational(1, 2)), Scalar(0), Scalar(Rational(1, 2))}};
    auto [s2, p2] = act_fields({Gen::S1}, s, p);
    CHECK(same_fields(s2, s));
}

TEST_CASE("pole of action is signalled with the generator") {
    FieldState s{{Scalar(0), Scalar(3), Scalar(1)}, Scalar(4)};
    ParamTriple p{{Scalar(Rational(1, 2)), Scalar(Rational(1, 4)), Scalar(Rational(1, 4))}};
    CHECK_THROWS_AS(act_fields({Gen::S0}, s, p), PoleOfAction);
    try {
        act_fields({Gen::S0}, s, p);
    } catch (const PoleOfAction& e) {
        CHECK(e.generator == 0);
    }
}

TEST_CASE("translation shifts alpha by (+1, -1, 0)") {
    ParamTriple p{{Scalar(0), Scalar(0), Scalar(1)}};
    ParamTriple r = act_params({Gen::Pi, Gen::S2, Gen::S1}, p);
    CHECK(r.g[0] == Scalar(1));
    CHECK(r.g[1] == Scalar(-1));
    CHECK(r.g[2] == Scalar(1));

    std::mt19937_64 rng(77);
    for (int i = 0; i < 50; ++i) {
        auto [s, q] = random_state(rng);
        ParamTriple im = act_params({Gen::Pi, Gen::S2, Gen::S1}, q);
        CHECK(im.g[0] == q.g[0] + Scalar(1));
        CHECK(im.g[1] == q.g[1] - Scalar(1));
        CHECK(im.g[2] == q.g[2]);
    }
}

TEST_CASE("T composite matches the printed closed forms, standard convention only") {
    std::mt19937_64 rng(123);
    int done = 0;
    while (done < 100) {
        auto [s, p] = random_state(rng);
        try {
            auto [ts, tp] = translation_T(s, p);
            CHECK(ts.f[1] == translation_T_f1_closed(s, p));
            auto [is, ip] = translation_T_inverse(s, p);
            CHECK(is.f[0] == translation_T_inv_f0_closed(s, p));
            ++done;
        } catch (const PoleOfAction&) {
        }
    }
}

TEST_CASE("flipped sign convention fails the printed T(f1) closed form") {
    // bring-up check that froze the convention: the conjugate representation
    // satisfies the Coxeter relations but not the printed translation
    FieldState s{{Scalar(2), Scalar(3), Scalar(-1)}, Scalar(4)};
    ParamTriple p{{Scalar(Rational(1, 2)), Scalar(Rational(1, 3)), Scalar(Rational(1, 6))}};
    WeylWord tw{Gen::Pi, Gen::S2, Gen::S1};
    auto [fs, fp] = act_fields(tw, s, p, FieldSignConvention::Flipped);
    CHECK(fs.f[1] != translation_T_f1_closed(s, p));
    auto [s6, p6] = act_fields({Gen::S0, Gen::S1, Gen::S0, Gen::S1, Gen::S0, Gen::S1}, s, p,
                               FieldSignConvention::Flipped);
    CHECK(same_fields(s6, s));  // Coxeter alone cannot discriminate
}

TEST_CASE("T inverse composes to the identity") {
    std::mt19937_64 rng(3);
    int done = 0;
    while (done < 100) {
        auto [s, p] = random_state(rng);
        try {
            auto [ts, tp] = translation_T(s, p);
            auto [rs, rp] = translation_T_inverse(ts, tp);
            CHECK(same_fields(rs, s));
            CHECK(same_params(rp, p));
            ++done;
        } catch (const PoleOfAction&) {
        }
    }
}

TEST_CASE("dp1_from_T: one step equals one application of translation_T") {
    std::mt19937_64 rng(55);
    int done = 0;
    while (done < 50) {
        auto [s, p] = random_state(rng);
        try {
            auto [ts, tp] = translation_T(s, p);
            DpOrbit orbit = dp1_from_T(s.f[1], s.f[0], s.t, p.g[0], p.g[1], 1);
            CHECK(orbit.xy[1].first == ts.f[1]);
            CHECK(orbit.xy[1].second == ts.f[0]);
            ++done;
        } catch (const PoleOfAction&) {
        } catch (const SingularStep&) {
        }
    }
}

TEST_CASE("dp1_from_T orbit tracks repeated translation exactly") {
    FieldState s{{Scalar(Rational(5, 7)), Scalar(Rational(3, 2)), Scalar(Rational(-1, 3))}, Scalar(0)};
    s.t = s.fsum();
    ParamTriple p{{Scalar(Rational(2, 5)), Scalar(Rational(1, 3)), Scalar(Rational(4, 15))}};
    DpOrbit orbit = dp1_from_T(s.f[1], s.f[0], s.t, p.g[0], p.g[1], 6);
    FieldState cur = s;
    ParamTriple cp = p;
    for (int n = 1; n <= 6; ++n) {
        auto [ns, np] = translation_T(cur, cp);
        cur = ns;
        cp = np;
        CHECK(orbit.xy[n].first == cur.f[1]);
        CHECK(orbit.xy[n].second == cur.f[0]);
    }
}

TEST_CASE("dp1_from_T signals singular seeds") {
    CHECK_THROWS_AS(dp1_from_T(Scalar(1), Scalar(0), Scalar(2), Scalar(1), Scalar(1), 3), SingularStep);
}

TEST_CASE("backlund ladder parameters: two-path evaluation of the printed formulas") {
    long bits = 192;
    P4Ladder lad{Real(bits), Real(bits)};  // c0 = c1 = 0
    CHECK(lad.alpha(0).is_zero());
    CHECK(lad.beta(0).is_zero());
    // alpha_1 = -1/2 - c0/2 - 3/2 c1; check against the recurrence route
    // alpha_{n+1} = -(2 alpha_n + 3 beta_n + 2)/4, beta_{n+1} = -(alpha_n - beta_n/2 - 1)
    P4Ladder lad2{Real("0.25", bits), Real("-0.5", bits)};
    Real eps = Real::pow2(-180, bits);
    for (long n = 0; n < 6; ++n) {
        Real a_next = -(Real(2.0, bits) * lad2.alpha(n) + Real(3.0, bits) * lad2.beta(n) +
                        Real(2.0, bits)) /
                      Real(4.0, bits);
        Real b_next = -(lad2.alpha(n) - lad2.beta(n) / Real(2.0, bits) - Real(1.0, bits));
        CHECK(abs(a_next - lad2.alpha(n + 1)) < eps);
        CHECK(abs(abs(b_next) - abs(lad2.beta(n + 1))) < eps);
    }
}

TEST_CASE("backlund up/down formulas at w = 0 signal errors") {
    long bits = 128;
    CHECK_THROWS_AS(backlund_p4_up(Real(bits), Real(1.0, bits), Real(1.0, bits), Real(1.0, bits)),
                    DivisionByZero);
    CHECK_THROWS_AS(backlund_p4_down(Real(bits), Real(1.0, bits), Real(1.0, bits), Real(1.0, bits)),
                    DivisionByZero);
}

}  // TEST_SUITE
