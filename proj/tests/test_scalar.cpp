// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hexlat/errors.hpp"
#include "hexlat/scalar.hpp"

using namespace hexlat;

TEST_CASE("rational round trip and normalization") {
    CHECK(rat_str(Rat(22, 4)) == "11/2");
    CHECK(rat_str(Rat(-3)) == "-3");
    CHECK(rat_parse("7/3") == Rat(7, 3));
    CHECK(rat_parse("-5") == Rat(-5));
    CHECK(rat_parse("-9/12") == Rat(-3, 4));
    CHECK_THROWS_AS(rat_parse("1/0"), DomainMismatch);
    CHECK_THROWS_AS(rat_parse("x"), DomainMismatch);
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
}

TEST_CASE("integer powers") {
    CHECK(ipow(Rat(2), -3) == Rat(1, 8));
    CHECK(ipow(Rat(-3, 2), 2) == Rat(9, 4));
    CHECK(ipow(Rat(5), 0) == Rat(1));
    CHECK(ipow(Rat(0), 0) == Rat(1));
    CHECK_THROWS_AS(ipow(Rat(0), -2), SingularSolve);
}

TEST_CASE("hyperbolic parameter values stay rational") {
    CHECK_THROWS_AS(HypParam(Rat(-1)), DomainMismatch);
    CHECK_THROWS_AS(HypParam(Rat(0)), DomainMismatch);

    std::vector<HypParam> zs;
    zs.emplace_back(Rat(2));
    CHECK(hyp_eval(HypKind::Sinh, {1}, zs) == Rat(3, 4));
    CHECK(hyp_eval(HypKind::Exp, {-1}, zs) == Rat(1, 2));

    zs.emplace_back(Rat(3, 2));
    CHECK(hyp_eval(HypKind::Exp, {2, -1}, zs) == Rat(8, 3));
    // sinh(2a - b) with e^a = 2, e^b = 3/2: (8/3 - 3/8) / 2
    CHECK(hyp_eval(HypKind::Sinh, {2, -1}, zs) == Rat(55, 48));
}

TEST_CASE("degenerate curves are rejected") {
    CHECK_THROWS_AS(EllipticContext(Cpx(3.0, 0.0), Cpx(1.0, 0.0)), DegenerateCurve);
    EllipticContext ok(Cpx(3.0, 0.4), Cpx(1.0, 0.0));
    CHECK(ok.tol() == doctest::Approx(1e-12));
}

TEST_CASE("weierstrass values satisfy the defining differential equation") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    int curves = 0;
    while (curves < 8) {
        Cpx g2(box(rng), box(rng)), g3(box(rng), box(rng));
        if (std::abs(g2 * g2 * g2 - 27.0 * g3 * g3) < 1e-3) continue;
        ++curves;
        EllipticContext ctx(g2, g3);
        for (int k = 0; k < 12; ++k) {
            Cpx z(box(rng) / 2.0, box(rng) / 2.0);
            if (std::abs(z) < 0.05) continue;
            auto [p, dp] = ctx.weierstrass_eval(z);
            Cpx ode = dp * dp - (4.0 * p * p * p - g2 * p - g3);
            double scale = std::abs(dp) * std::abs(dp) + std::abs(4.0 * p * p * p) +
                           std::abs(g2 * p) + std::abs(g3) + 1.0;
            CHECK(std::abs(ode) / scale < 1e-10);

            auto [pm, dpm] = ctx.weierstrass_eval(-z);
            CHECK(std::abs(pm - p) < 1e-9 * (1.0 + std::abs(p)));
            CHECK(std::abs(dpm + dp) < 1e-9 * (1.0 + std::abs(dp)));
        }
    }
}

TEST_CASE("weierstrass duplication cross-check") {
    EllipticContext ctx(Cpx(1.1, -0.7), Cpx(0.4, 0.9));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> box(-0.6, 0.6);
    for (int k = 0; k < 20; ++k) {
        Cpx z(box(rng), box(rng));
        if (std::abs(z) < 0.1) continue;
        auto [p, dp] = ctx.weierstrass_eval(z);
        if (std::abs(dp) < 1e-6) continue;
        Cpx m = (6.0 * p * p - ctx.g2() / 2.0) / dp;
        Cpx doubled = m * m / 4.0 - 2.0 * p;
        auto [p2, dp2] = ctx.weierstrass_eval(2.0 * z);
        (void)dp2;
        CHECK(std::abs(p2 - doubled) < 1e-8 * (1.0 + std::abs(p2)));
    }
}

TEST_CASE("weierstrass pole behavior near zero") {
    EllipticContext ctx(Cpx(0.9, 0.2), Cpx(-0.3, 0.5));
    Cpx z(1e-2, 5e-3);
    auto [p, dp] = ctx.weierstrass_eval(z);
    CHECK(std::abs(p * z * z - 1.0) < 1e-3);
    CHECK(std::abs(dp * z * z * z + 2.0) < 1e-2);
    CHECK_THROWS_AS(ctx.weierstrass_eval(Cpx(0.0, 0.0)), PoleAtLatticePoint);
    CHECK_THROWS_AS(ctx.weierstrass_eval(Cpx(1e13, 0.0)), NonConvergent);
}
