// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hexlat/hexsys.hpp"
#include "hexlat/sampling.hpp"

using namespace hexlat;

TEST_CASE("every row omits exactly the opposite slot") {
    for (HexVariant variant : {HexVariant::TypeA, HexVariant::TypeC}) {
        for (int k = 0; k < 6; ++k) {
            const HexRow& row = hex_row(variant, k);
            std::array<int, 4> c = row.corners;
            std::sort(c.begin(), c.end());
            CHECK(std::adjacent_find(c.begin(), c.end()) == c.end());
            for (int slot : row.corners) {
                CHECK(slot != k);
                CHECK(slot != hex_missing_slot(k));
            }
        }
    }
}

TEST_CASE("legal partner table") {
    CHECK(is_legal_c_pair(Family::C3_hh0, Family::C3_h0h));
    CHECK(is_legal_c_pair(Family::C3_h0h, Family::C3_hh0));
    CHECK(is_legal_c_pair(Family::C3_100, Family::C3_100));
    CHECK(is_legal_c_pair(Family::C2_000, Family::C1_1));
    CHECK(is_legal_c_pair(Family::C1_1, Family::C2_000));
    CHECK(is_legal_c_pair(Family::C1_0, Family::C1_0));
    CHECK_FALSE(is_legal_c_pair(Family::C1_1, Family::C1_1));
    CHECK_FALSE(is_legal_c_pair(Family::C3_hh0, Family::C3_hh0));
    CHECK_FALSE(is_legal_c_pair(Family::C2_110, Family::C2_100));
}

TEST_CASE("solving for the center or the missing slot is rejected") {
    HexSystem sys = HexSystem::type_a(Family::A2_10);
    RatAdd3 pp{Rat(1, 2), Rat(1, 3), Rat(1, 5)};
    std::array<Rat, 6> xs = {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)};
    CHECK_THROWS_AS(hex_solve_slot(sys, 2, 2, xs, pp), DomainMismatch);
    CHECK_THROWS_AS(hex_solve_slot(sys, 2, 5, xs, pp), DomainMismatch);
}

TEST_CASE("a vanishing leading coefficient is reported, not divided by") {
    // Row 2 of a second-kind system reads corners (1, 3, 0, 4) around center
    // slot 2; for the plain C1 family the coefficient of slot 4 factors as
    // -(x - xa)(x - xb), so equal values at slots 2 and 1 make it vanish.
    HexSystem sys = HexSystem::type_c(Family::C1_0, Family::C1_0);
    RatAdd3 pp{Rat(1), Rat(2), Rat(5)};
    std::array<Rat, 6> xs = {Rat(5), Rat(7), Rat(7), Rat(3), Rat(0), Rat(2)};
    CHECK_THROWS_AS(hex_solve_slot(sys, 2, 4, xs, pp), SingularSolve);
    xs[2] = Rat(9);
    CHECK_NOTHROW(hex_solve_slot(sys, 2, 4, xs, pp));
}

TEST_CASE("all eight solve orders agree and satisfy the system") {
    HexSystem sys = HexSystem::type_c(Family::C2_110, Family::C2_101);
    Sampler smp(11);
    RatAdd3 pp{smp.nonzero_rational(), smp.nonzero_rational(), smp.nonzero_rational()};
    std::array<Rat, 4> known = {smp.rational(), smp.rational(), smp.rational(), smp.rational()};
    for (int i = 0; i < 6; ++i) {
        auto canonical = hex_solve_ivp(sys, i, known, pp);
        auto paths = hex_solve_all_paths(sys, i, known, pp);
        CHECK(paths.size() == 8);
        for (const auto& xs : paths) CHECK(xs == canonical);
        for (int k = 0; k < 6; ++k) CHECK(hex_row_value(sys, k, canonical, pp) == 0);
    }
}

TEST_CASE("the relaxed seeding reproduces the canonical completion") {
    HexSystem sys = HexSystem::type_a(Family::A3d0);
    Sampler smp(13);
    RatHyp3 pp{smp.positive_z(), smp.positive_z(), smp.positive_z()};
    std::array<Rat, 4> known = {smp.rational(), smp.rational(), smp.rational(), smp.rational()};
    for (int i = 0; i < 6; ++i) {
        auto xs = hex_solve_ivp(sys, i, known, pp);
        std::array<Rat, 4> sparse = {xs[i % 6], xs[(i + 1) % 6], xs[(i + 2) % 6],
                                     xs[(i + 4) % 6]};
        CHECK(hex_solve_relaxed(sys, i, sparse, pp) == xs);
    }
}

TEST_CASE("hexagon completion verifies across families") {
    CahOptions opt;
    opt.trials = 10;
    opt.relaxed = true;

    for (HexSystem sys : {HexSystem::type_a(Family::A3d1), HexSystem::type_a(Family::A2_00),
                          HexSystem::type_c(Family::C3_hh0, Family::C3_h0h),
                          HexSystem::type_c(Family::C2_000, Family::C1_1),
                          HexSystem::type_c(Family::C1_0, Family::C1_0)}) {
        ConsistencyReport report;
        cah_verify(sys, report, opt);
        INFO(sys.name());
        CHECK(report.ok());
        CHECK(report.total() > 0);
    }
}

TEST_CASE("hexagon completion verifies on the elliptic face") {
    Sampler seed_smp(19);
    EllipticContext ctx = sample_elliptic_context(seed_smp);
    CahOptions opt;
    opt.trials = 5;
    ConsistencyReport report;
    cah_verify(HexSystem::type_a(Family::A4), report, opt, &ctx);
    CHECK(report.ok());
    CHECK_THROWS_AS(cah_verify(HexSystem::type_a(Family::A4), report, opt, nullptr),
                    EllipticUnavailable);
}

TEST_CASE("an illegal partner pair is inconsistent") {
    CahOptions opt;
    opt.trials = 5;
    ConsistencyReport report;
    cah_verify(HexSystem::type_c(Family::C1_1, Family::C1_1), report, opt);
    CHECK(report.failed() > 0);
}

TEST_CASE("system symmetries hold, including the designated rotation failure") {
    HexSymmetryOptions opt;
    opt.trials = 10;

    ConsistencyReport ra;
    hex_symmetry_check(HexSystem::type_a(Family::A2_11), ra, opt);
    CHECK(ra.ok());

    ConsistencyReport rc;
    hex_symmetry_check(HexSystem::type_c(Family::C3_100, Family::C3_100), rc, opt);
    CHECK(rc.ok());

    ConsistencyReport rp;
    hex_symmetry_check(HexSystem::type_c(Family::C2_110, Family::C2_101), rp, opt);
    CHECK(rp.ok());
}
