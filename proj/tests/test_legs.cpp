// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hexlat/legs.hpp"

using namespace hexlat;

namespace {

double dist(Cpx a, Cpx b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("additive rows") {
    CHECK(leg_additive(Family::A2_00));
    CHECK(leg_additive(Family::C2_000));
    CHECK(leg_additive(Family::C1_0));
    CHECK_FALSE(leg_additive(Family::A2_10));
    CHECK_FALSE(leg_additive(Family::C1_1));
    CHECK_FALSE(leg_additive(Family::A3d1));
}

TEST_CASE("pinned leg values") {
    Cpx x(2.0, 0.5), y(-1.0, 0.25), t(0.3, -0.7);

    // coincident arguments collapse the d=1 additive-row leg to -1
    CHECK(dist(eval_leg(Family::A2_10, x, x, t), Cpx(-1)) < 1e-15);
    // zero shift collapses the d=0 leg to 0
    CHECK(dist(eval_leg(Family::A2_00, x, y, Cpx(0)), Cpx(0)) < 1e-15);
    // the fully degenerate hyperbolic row keeps only the far corner
    CHECK(dist(eval_leg(Family::C3_000, x, y, t), y) < 1e-15);
    CHECK(dist(eval_leg(Family::C1_1, x, y, t), y) < 1e-15);
    CHECK(dist(eval_leg(Family::C1_0, x, y, t), -y / 2.0) < 1e-15);
    CHECK(dist(eval_leg(Family::C2_100, x, y, t), x + y + t) < 1e-15);
    CHECK(dist(eval_leg(Family::C2_101, x, y, t), (x + t) * (x + t) - y) < 1e-14);
    CHECK(dist(eval_leg(Family::C2_000, x, y, t), (y + t) / (2.0 * x)) < 1e-15);
    CHECK(dist(eval_leg(Family::A2_00, x, y, t), t / (x - y)) < 1e-15);
    CHECK(dist(eval_leg(Family::C3_100, x, y, t), x * y - std::exp(-t)) < 1e-14);
}

TEST_CASE("branch guards") {
    Cpx y(0.3, 0.4), t(0.2, 0.1);
    CHECK_THROWS_AS(eval_leg(Family::A3d1, Cpx(1.0, 1e-12), y, t), BranchAmbiguity);
    CHECK_THROWS_AS(eval_leg(Family::A3d1, Cpx(-1.0, 0.0), y, t), BranchAmbiguity);
    CHECK_THROWS_AS(eval_leg(Family::C3_hh0, Cpx(1.0), y, t), BranchAmbiguity);
    CHECK_THROWS_AS(eval_leg(Family::A2_11, Cpx(1e-12, 0.0), y, t), BranchAmbiguity);
    CHECK_THROWS_AS(eval_leg(Family::C2_110, Cpx(0.0), y, t), BranchAmbiguity);
    CHECK_NOTHROW(eval_leg(Family::A3d1, Cpx(2.0, 0.3), y, t));
    CHECK_THROWS_AS(eval_leg(Family::Q2, Cpx(2.0), y, t), UnknownRow);
}

TEST_CASE("leg tables") {
    const LegSet& h21 = quad_legs(Family::H2_1);
    CHECK(h21.a == Family::A2_11);
    CHECK(h21.a_star == Family::A2_10);
    CHECK(h21.c == Family::C2_110);
    CHECK(h21.c_star == Family::C2_101);
    CHECK(leg_for_role(Family::H1_1, LegRole::CStar) == Family::C2_000);
    CHECK(leg_for_role(Family::Q3d1, LegRole::C) == Family::A3d1);
    CHECK(quad_legs(Family::Q1d0).a == Family::A2_00);
    CHECK_THROWS_AS(quad_legs(Family::Q4), UnsupportedFamily);
    CHECK_THROWS_AS(quad_legs(Family::A2_11), UnsupportedFamily);
    CHECK(c_companion_a(Family::C3_hh0) == Family::A3d1);
    CHECK(c_companion_a(Family::C2_000) == Family::A2_00);
    CHECK_THROWS_AS(c_companion_a(Family::A2_11), UnknownRow);
}

TEST_CASE("three legs vanish on quad solutions") {
    for (Family quad :
         {Family::Q3d1, Family::Q3d0, Family::Q2, Family::Q1d1, Family::Q1d0, Family::H3_11,
          Family::H3_10, Family::H3_00, Family::H2_1, Family::H2_0, Family::H1_1,
          Family::H1_0}) {
        CAPTURE(family_name(quad));
        for (std::uint64_t trial = 0; trial < 4; ++trial) {
            Sampler smp = Sampler::for_trial(91, trial);
            LegSample s = sample_quad_solution(quad, smp);
            for (int center = 0; center < 4; ++center) {
                CAPTURE(center);
                CHECK(three_leg_residual(quad, center, s.v, s.al, s.be) < 1e-9);
            }
        }
    }
}

TEST_CASE("three-leg center range") {
    Sampler smp = Sampler::for_trial(17, 0);
    LegSample s = sample_quad_solution(Family::Q1d1, smp);
    CHECK_THROWS_AS(three_leg_value(Family::Q1d1, 4, s.v, s.al, s.be), DomainMismatch);
    CHECK_THROWS_AS(three_leg_value(Family::Q1d1, -1, s.v, s.al, s.be), DomainMismatch);
}

TEST_CASE("four-leg driver per face") {
    LegOptions opt;
    opt.trials = 4;
    for (Family face : face_families()) {
        if (face == Family::A4) continue;
        CAPTURE(family_name(face));
        ConsistencyReport report;
        four_leg_verify(face, report, opt);
        CHECK(report.ok());
        CHECK(report.total() == 4);
    }
}

TEST_CASE("star arrangement names") {
    for (StarArrangement arr :
         {StarArrangement::SymmetricQuads, StarArrangement::AsymmetricQuads,
          StarArrangement::MixedTrapezoidal})
        CHECK(star_arrangement_parse(star_arrangement_name(arr)) == arr);
    CHECK_THROWS_AS(star_arrangement_parse("fig-something"), UnknownRow);
}

TEST_CASE("vertex stars compose") {
    for (Family q : {Family::Q3d1, Family::Q3d0, Family::Q2, Family::Q1d1, Family::Q1d0}) {
        CAPTURE(family_name(q));
        for (std::uint64_t trial = 0; trial < 3; ++trial) {
            Sampler smp = Sampler::for_trial(23, trial);
            StarResult r = vertex_star_composition(StarArrangement::SymmetricQuads, q, smp);
            CHECK(r.composition_residual < 1e-9);
            CHECK(r.four_leg_residual < 1e-9);
        }
    }
    for (Family h : {Family::H3_11, Family::H3_10, Family::H3_00, Family::H2_1, Family::H2_0,
                     Family::H1_1, Family::H1_0}) {
        CAPTURE(family_name(h));
        for (std::uint64_t trial = 0; trial < 3; ++trial) {
            Sampler smp = Sampler::for_trial(29, trial);
            StarResult ra = vertex_star_composition(StarArrangement::AsymmetricQuads, h, smp);
            CHECK(ra.composition_residual < 1e-9);
            CHECK(ra.four_leg_residual < 1e-9);
            Sampler smp2 = Sampler::for_trial(31, trial);
            StarResult rm = vertex_star_composition(StarArrangement::MixedTrapezoidal, h, smp2);
            CHECK(rm.composition_residual < 1e-9);
            CHECK(rm.four_leg_residual < 1e-9);
        }
    }
}

TEST_CASE("arrangement family checks") {
    Sampler smp = Sampler::for_trial(1, 0);
    CHECK_THROWS_AS(vertex_star_composition(StarArrangement::SymmetricQuads, Family::H2_1, smp),
                    UnsupportedFamily);
    CHECK_THROWS_AS(vertex_star_composition(StarArrangement::AsymmetricQuads, Family::Q2, smp),
                    UnsupportedFamily);
    CHECK_THROWS_AS(
        vertex_star_composition(StarArrangement::MixedTrapezoidal, Family::Q1d0, smp),
        UnsupportedFamily);
}

TEST_CASE("legs_verify smoke") {
    LegOptions opt;
    opt.trials = 2;
    ConsistencyReport report;
    legs_verify(report, opt);
    CHECK(report.ok());
    bool saw_exclusion = false;
    for (const auto& e : report.entries())
        if (e.id == "three-leg/Q4") saw_exclusion = true;
    CHECK(saw_exclusion);
}
