// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hexlat/catalog.hpp"
#include "hexlat/sampling.hpp"

using namespace hexlat;

namespace {

std::array<Rat, 4> rat_values(Sampler& smp) {
    return {smp.rational(), smp.rational(), smp.rational(), smp.rational()};
}

std::array<Cpx, 4> cpx_values(Sampler& smp) {
    return {smp.complex_box(), smp.complex_box(), smp.complex_box(), smp.complex_box()};
}

}  // namespace

TEST_CASE("the two transcriptions of every family agree") {
    Sampler seed_smp(41);
    EllipticContext ctx = sample_elliptic_context(seed_smp);

    for (Family f : quad_families()) {
        for (int t = 0; t < 50; ++t) {
            Sampler smp = Sampler::for_trial(100 + static_cast<int>(f), t);
            switch (family_domain(f)) {
                case ParamDomain::Additive: {
                    RatAdd2 pp{smp.nonzero_rational(), smp.nonzero_rational()};
                    auto v = rat_values(smp);
                    CHECK(poly::quad_value(f, v, pp) == alt::quad_value(f, v, pp));
                    break;
                }
                case ParamDomain::Hyperbolic: {
                    RatHyp2 pp{smp.positive_z(), smp.positive_z()};
                    auto v = rat_values(smp);
                    CHECK(poly::quad_value(f, v, pp) == alt::quad_value(f, v, pp));
                    break;
                }
                case ParamDomain::Elliptic: {
                    CpxParams2 pp{smp.complex_box(0.9), smp.complex_box(0.9), &ctx};
                    if (std::abs(pp.a) < 0.25 || std::abs(pp.b) < 0.25 ||
                        std::abs(pp.a - pp.b) < 0.25)
                        continue;
                    auto v = cpx_values(smp);
                    Cpx lhs = poly::quad_value(f, v, pp), rhs = alt::quad_value(f, v, pp);
                    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs) + std::abs(rhs)));
                    break;
                }
            }
        }
    }

    for (Family f : face_families()) {
        for (int t = 0; t < 50; ++t) {
            Sampler smp = Sampler::for_trial(200 + static_cast<int>(f), t);
            switch (family_domain(f)) {
                case ParamDomain::Additive: {
                    RatAdd3 pp{smp.nonzero_rational(), smp.nonzero_rational(),
                               smp.nonzero_rational()};
                    Rat x = smp.rational();
                    auto v = rat_values(smp);
                    CHECK(poly::face_value(f, x, v, pp) == alt::face_value(f, x, v, pp));
                    break;
                }
                case ParamDomain::Hyperbolic: {
                    RatHyp3 pp{smp.positive_z(), smp.positive_z(), smp.positive_z()};
                    Rat x = smp.rational();
                    auto v = rat_values(smp);
                    CHECK(poly::face_value(f, x, v, pp) == alt::face_value(f, x, v, pp));
                    break;
                }
                case ParamDomain::Elliptic: {
                    CpxParams3 pp{smp.complex_box(0.9), smp.complex_box(0.9),
                                  smp.complex_box(0.9), &ctx};
                    if (std::abs(pp.a) < 0.25 || std::abs(pp.b) < 0.25 ||
                        std::abs(pp.c) < 0.25 || std::abs(pp.a - pp.b) < 0.25 ||
                        std::abs(pp.a + pp.b - pp.c) < 0.25)
                        continue;
                    Cpx x = smp.complex_box();
                    auto v = cpx_values(smp);
                    auto [lhs, scale] = poly::a4_face_scaled(x, v, pp);
                    Cpx rhs = alt::face_value(f, x, v, pp);
                    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + scale));
                    break;
                }
            }
        }
    }
}

TEST_CASE("swap flag exchanges both corner pairs") {
    RatAdd2 pp{Rat(2, 3), Rat(-1, 5)};
    std::array<Rat, 4> v = {Rat(1), Rat(2), Rat(3), Rat(4)};
    std::array<Rat, 4> w = {Rat(2), Rat(1), Rat(4), Rat(3)};
    EquationSpec swapped{Family::H2_1, true};
    CHECK(eval_quad(swapped, v, pp) == poly::quad_value(Family::H2_1, w, pp));
}

TEST_CASE("trapezoidal reindexing at a pinned point") {
    // H1:e=0 with corners (2, 1, 0, xd) reduces to xd - 2*al.
    RatAdd2 pp{Rat(3, 7), Rat(-2, 5)};
    Rat xd(11, 4);
    std::array<Rat, 4> v = {Rat(2), Rat(1), Rat(0), xd};
    CHECK(trapezoidal(Family::H1_0, v, pp) == xd - Rat(6, 7));
}

TEST_CASE("applying the trapezoidal map twice restores the equation") {
    for (Family f : {Family::H1_1, Family::H2_0, Family::Q2}) {
        Sampler smp(17 + static_cast<int>(f));
        RatAdd2 pp{smp.nonzero_rational(), smp.nonzero_rational()};
        auto v = rat_values(smp);
        auto mp = map_params(pp, kTrapezoidParams);
        std::array<Rat, 4> w = {v[0], v[3], v[2], v[1]};
        CHECK(trapezoidal(f, w, mp) == poly::quad_value(f, v, pp));
    }
    Sampler smp(29);
    RatHyp2 pp{smp.positive_z(), smp.positive_z()};
    auto v = rat_values(smp);
    auto mp = map_params(pp, kTrapezoidParams);
    std::array<Rat, 4> w = {v[0], v[3], v[2], v[1]};
    CHECK(trapezoidal(Family::H3_11, w, mp) == poly::quad_value(Family::H3_11, v, pp));
}

TEST_CASE("linear coefficient extraction") {
    Sampler smp(5);
    RatAdd3 pp{Rat(1, 2), Rat(2, 3), Rat(-3, 5)};
    auto v = rat_values(smp);
    CHECK(extract_p1(Family::A2_10, v, pp) ==
          poly::face_p1_value(Family::A2_10, v, pp));

    RatHyp3 hp{Rat(2), Rat(3), Rat(5, 2)};
    auto w = rat_values(smp);
    CHECK_NOTHROW(extract_p1(Family::C3_hh0, w, hp));
    CHECK_THROWS_AS(extract_p1(Family::A4, v, pp), UnsupportedFamily);
}

TEST_CASE("coefficient-to-quad correspondence holds for all fifteen rows") {
    for (const auto& row : correspondence_rows()) {
        ConsistencyReport report;
        CorrespondenceOptions opt;
        opt.trials = 5;
        correspondence_verify(row, report, opt);
        INFO(family_name(row.face));
        CHECK(report.ok());
        CHECK(report.total() == 5);
    }
}

TEST_CASE("the additive zero-delta row has constant factor -1") {
    const auto& row = correspondence_row_for(Family::A2_00);
    CHECK(row.quad == Family::Q1d0);
    CHECK_FALSE(row.swap_ac_bd);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Sampler smp(seed * 31 + 7);
        CHECK(abs_correspondence_check(row, smp) == Rat(-1));
    }
}

TEST_CASE("a mismatched quad target is rejected") {
    CorrespondenceRow bogus{Family::A2_00, Family::Q1d1, false};
    Sampler smp(3);
    CHECK_THROWS_AS(abs_correspondence_check(bogus, smp), CorrespondenceFailed);
    CHECK_THROWS_AS(correspondence_row_for(Family::A4), UnknownRow);
}

TEST_CASE("expected symmetry table") {
    CHECK(symmetry_expected(SymmetryKind::QuadSym1, Family::Q2));
    CHECK(symmetry_expected(SymmetryKind::QuadSym1, Family::H3_10));
    CHECK_FALSE(symmetry_expected(SymmetryKind::QuadSym1, Family::H3_11));
    CHECK_FALSE(symmetry_expected(SymmetryKind::QuadSym1, Family::H2_1));
    CHECK_FALSE(symmetry_expected(SymmetryKind::QuadSym1, Family::H1_1));
    CHECK(symmetry_expected(SymmetryKind::QuadSym2, Family::H1_1));
    CHECK(symmetry_expected(SymmetryKind::QuadSym2, Family::Q4));
    CHECK(symmetry_expected(SymmetryKind::FaceSym1, Family::C3_000));
    CHECK(symmetry_expected(SymmetryKind::FaceSym2, Family::A3d1));
    CHECK_FALSE(symmetry_expected(SymmetryKind::FaceSym2, Family::C2_110));
    CHECK(symmetry_expected(SymmetryKind::FaceSym3, Family::A2_11));
    CHECK_FALSE(symmetry_expected(SymmetryKind::FaceSym3, Family::A4));
}

TEST_CASE("symmetry kind names round trip") {
    for (SymmetryKind k : {SymmetryKind::QuadSym1, SymmetryKind::QuadSym2, SymmetryKind::FaceSym1,
                           SymmetryKind::FaceSym2, SymmetryKind::FaceSym3})
        CHECK(symmetry_kind_parse(symmetry_kind_name(k)) == k);
    CHECK_THROWS_AS(symmetry_kind_parse("face-sym-9"), UnknownRow);
}

TEST_CASE("transposition residual is nonzero exactly for the asymmetric quads") {
    RatAdd2 pp{Rat(1, 2), Rat(5, 3)};
    std::array<Rat, 4> v = {Rat(1), Rat(-2), Rat(3, 2), Rat(4)};
    CHECK(symmetry_residual(SymmetryKind::QuadSym1, Family::H2_1, v, pp) != 0);
    CHECK(symmetry_residual(SymmetryKind::QuadSym1, Family::H1_1, v, pp) != 0);
    CHECK(symmetry_residual(SymmetryKind::QuadSym1, Family::H2_0, v, pp) == 0);
    CHECK(symmetry_residual(SymmetryKind::QuadSym2, Family::H2_1, v, pp) == 0);
}

TEST_CASE("arity mismatches are not applicable") {
    RatAdd2 pp2{Rat(1), Rat(2)};
    RatAdd3 pp3{Rat(1), Rat(2), Rat(3)};
    std::array<Rat, 4> v = {Rat(1), Rat(2), Rat(3), Rat(4)};
    CHECK_THROWS_AS(symmetry_residual(SymmetryKind::FaceSym1, Family::Q2, v, pp2),
                    NotApplicable);
    CHECK_THROWS_AS(symmetry_residual(SymmetryKind::QuadSym1, Family::A2_11, Rat(1), v, pp3),
                    NotApplicable);
    CpxParams3 cpp{Cpx(0.5), Cpx(0.7), Cpx(0.9), nullptr};
    std::array<Cpx, 4> cv = {Cpx(1), Cpx(2), Cpx(3), Cpx(4)};
    CHECK_THROWS_AS(symmetry_residual(SymmetryKind::FaceSym3, Family::A4, Cpx(1), cv, cpp),
                    NotApplicable);
}

TEST_CASE("symmetry verification passes for every family") {
    Sampler seed_smp(73);
    EllipticContext ctx = sample_elliptic_context(seed_smp);
    SymmetryOptions opt;
    opt.trials = 6;
    for (Family f : face_families()) {
        ConsistencyReport report;
        symmetry_verify(f, report, opt, &ctx);
        INFO(family_name(f));
        CHECK(report.ok());
    }
    for (Family f : quad_families()) {
        ConsistencyReport report;
        symmetry_verify(f, report, opt, &ctx);
        INFO(family_name(f));
        CHECK(report.ok());
    }
}
