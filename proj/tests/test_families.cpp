// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexlat/errors.hpp"
#include "hexlat/families.hpp"

using namespace hexlat;

TEST_CASE("names round trip for every family") {
    for (Family f : face_families()) {
        CHECK(family_is_face(f));
        CHECK(family_parse(family_name(f)) == f);
    }
    for (Family f : quad_families()) {
        CHECK(!family_is_face(f));
        CHECK(family_parse(family_name(f)) == f);
    }
    CHECK(face_families().size() == 16);
    CHECK(quad_families().size() == 13);
    CHECK_THROWS_AS(family_parse("A7"), UnknownRow);
}

TEST_CASE("canonical spellings") {
    CHECK(family_name(Family::C3_hh0) == "C3:1/2,1/2,0");
    CHECK(family_name(Family::C3_h0h) == "C3:1/2,0,1/2");
    CHECK(family_name(Family::Q3d1) == "Q3:d=1");
    CHECK(family_name(Family::H2_0) == "H2:e=0");
    CHECK(family_name(Family::A2_10) == "A2:1,0");
}

TEST_CASE("domains") {
    CHECK(family_domain(Family::A3d1) == ParamDomain::Hyperbolic);
    CHECK(family_domain(Family::C3_000) == ParamDomain::Hyperbolic);
    CHECK(family_domain(Family::Q3d0) == ParamDomain::Hyperbolic);
    CHECK(family_domain(Family::H3_11) == ParamDomain::Hyperbolic);
    CHECK(family_domain(Family::A2_11) == ParamDomain::Additive);
    CHECK(family_domain(Family::C1_0) == ParamDomain::Additive);
    CHECK(family_domain(Family::Q1d1) == ParamDomain::Additive);
    CHECK(family_domain(Family::H2_1) == ParamDomain::Additive);
    CHECK(family_domain(Family::A4) == ParamDomain::Elliptic);
    CHECK(family_domain(Family::Q4) == ParamDomain::Elliptic);
}

TEST_CASE("epsilon flags of the asymmetric quads") {
    CHECK(family_epsilon(Family::H3_11) == 1);
    CHECK(family_epsilon(Family::H3_10) == 0);
    CHECK(family_epsilon(Family::H3_00) == 0);
    CHECK(family_epsilon(Family::H2_1) == 1);
    CHECK(family_epsilon(Family::H2_0) == 0);
    CHECK(family_epsilon(Family::H1_1) == 1);
    CHECK(family_epsilon(Family::H1_0) == 0);
}

TEST_CASE("first-kind faces map onto symmetric quads") {
    CHECK(quad_partner_of_a(Family::A3d1) == Family::Q3d1);
    CHECK(quad_partner_of_a(Family::A3d0) == Family::Q3d0);
    CHECK(quad_partner_of_a(Family::A2_11) == Family::Q2);
    CHECK(quad_partner_of_a(Family::A2_10) == Family::Q1d1);
    CHECK(quad_partner_of_a(Family::A2_00) == Family::Q1d0);
    CHECK(quad_partner_of_a(Family::A4) == Family::Q4);
    CHECK_THROWS_AS(quad_partner_of_a(Family::C1_0), UnsupportedFamily);
}

TEST_CASE("equation spec serialization") {
    EquationSpec plain{Family::Q2, false};
    EquationSpec swapped{Family::H2_0, true};
    CHECK(plain.to_string() == "Q2");
    CHECK(swapped.to_string() == "H2:e=0;swap");
    CHECK(EquationSpec::parse("Q2") == plain);
    CHECK(EquationSpec::parse("H2:e=0;swap") == swapped);
    CHECK(EquationSpec::parse("C3:1/2,1/2,0").family == Family::C3_hh0);
    CHECK_THROWS_AS(EquationSpec::parse("Q2;mirror"), UnknownRow);
}
