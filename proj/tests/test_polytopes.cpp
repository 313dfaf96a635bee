// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexlat/polytopes.hpp"

using namespace hexlat;

TEST_CASE("combination table shape") {
    const auto& rows = combo_table();
    REQUIRE(rows.size() == 15);

    const ComboRow& first = rows[0];
    CHECK_FALSE(first.type_a);
    CHECK(first.c.family == Family::C3_hh0);
    CHECK(first.cbar.family == Family::C3_h0h);
    CHECK(first.h.family == Family::H3_11);
    CHECK_FALSE(first.h.swap_ab_cd);
    CHECK(first.q.family == Family::Q3d1);
    CHECK(first.qstar.family == Family::Q3d0);
    CHECK(first.hyperbolic());

    // The mirrored hyperbolic pair rereads the asymmetric quad with its
    // corner pairs transposed.
    CHECK(rows[1].h.family == Family::H3_11);
    CHECK(rows[1].h.swap_ab_cd);
    CHECK(rows[1].q.family == Family::Q3d0);

    int swapped = 0, type_a = 0, hyper = 0;
    for (const ComboRow& row : rows) {
        if (row.type_a) ++type_a;
        else if (row.h.swap_ab_cd) ++swapped;
        if (row.hyperbolic()) ++hyper;
    }
    CHECK(type_a == 5);
    CHECK(swapped == 3);
    CHECK(hyper == 6);  // four C3 pairs plus both hyperbolic type-A rows
}

TEST_CASE("combination row lookup") {
    CHECK(combo_row("C1:d=0").h.family == Family::H1_0);
    CHECK(combo_row("C2:0,0,0").cbar.family == Family::C1_1);
    CHECK(combo_row(7).name() == "C1:d=1");

    const ComboRow& a = combo_row("A2:0,0");
    CHECK(a.type_a);
    CHECK(a.a_quad == Family::Q1d0);

    CHECK_THROWS_AS((void)combo_row("A4"), UnknownRow);
    CHECK_THROWS_AS((void)combo_row("not-a-row"), UnknownRow);
    CHECK_THROWS_AS((void)combo_row(15), UnknownRow);
}

TEST_CASE("shape names round trip") {
    for (PolytopeShape sh :
         {PolytopeShape::CAHP1, PolytopeShape::CAHP2, PolytopeShape::CAED1, PolytopeShape::CAED2,
          PolytopeShape::CATO, PolytopeShape::PrismA, PolytopeShape::CA66D})
        CHECK(polytope_shape_parse(polytope_shape_name(sh)) == sh);
    CHECK(polytope_shape_name(PolytopeShape::PrismA) == "CAHP-A");
    CHECK_THROWS_AS((void)polytope_shape_parse("CAXX"), Error);
}

TEST_CASE("scenario data passes the structural audit") {
    const PolytopeScenario& hp1 = polytope_scenario(PolytopeShape::CAHP1);
    CHECK(hp1.params.size() == 4);
    CHECK(hp1.initial.size() == 5);
    CHECK(hp1.steps.size() == 8);
    CHECK(hp1.steps.front().hex);
    CHECK_FALSE(hp1.steps.front().check);
    CHECK(hp1.steps.back().check);
    CHECK(hp1.steps.back().quad == ScenarioQuad::Hu);

    CHECK(polytope_scenario(PolytopeShape::CAED1).params.size() == 5);
    CHECK(polytope_scenario(PolytopeShape::CATO).steps.size() == 14);
    CHECK(polytope_scenario(PolytopeShape::PrismA).initial.size() == 5);

    const PolytopeScenario& ca = polytope_scenario(PolytopeShape::CA66D);
    CHECK(ca.params.size() == 6);
    CHECK(ca.initial.size() == 7);
    CHECK(ca.steps.empty());
}

namespace {

void expect_clean(PolytopeShape shape, const ComboRow& row, int trials,
                  std::size_t checks_per_trial) {
    ConsistencyReport rep = run_polytope(shape, row, {trials, 11});
    INFO(polytope_shape_name(shape), "/", row.name());
    CHECK(rep.ok());
    CHECK(rep.total() == checks_per_trial * static_cast<std::size_t>(trials));
}

}  // namespace

TEST_CASE("every table pair satisfies the five hexagonal scenarios") {
    for (const ComboRow& row : combo_table()) {
        if (row.type_a) continue;
        expect_clean(PolytopeShape::CAHP1, row, 2, 7);
        expect_clean(PolytopeShape::CAHP2, row, 2, 7);
        expect_clean(PolytopeShape::CAED1, row, 2, 14);
        expect_clean(PolytopeShape::CAED2, row, 2, 14);
        expect_clean(PolytopeShape::CATO, row, 2, 9);
    }
}

TEST_CASE("type-A rows close up around both prism scenarios") {
    for (const ComboRow& row : combo_table()) {
        if (!row.type_a) continue;
        expect_clean(PolytopeShape::PrismA, row, 2, 7);
    }
    expect_clean(PolytopeShape::CA66D, combo_row("A2:0,0"), 1, 66);
    expect_clean(PolytopeShape::CA66D, combo_row("A3:d=0"), 1, 66);
}

TEST_CASE("exchanging the symmetric quads breaks consistency") {
    ComboRow bad = combo_row("C3:1/2,1/2,0");
    std::swap(bad.q, bad.qstar);
    ConsistencyReport rep = run_polytope(PolytopeShape::CAHP1, bad, {2, 11});
    CHECK(rep.failed() > 0);
}

TEST_CASE("rows that do not fit the shape are rejected") {
    ComboRow bad = combo_row("C1:d=1");
    bad.cbar = {Family::C1_1};  // (C1, C1) with nonzero shift does not close
    CHECK_THROWS_AS((void)run_polytope(PolytopeShape::CAHP1, bad, {1, 1}), IllegalCombo);

    CHECK_THROWS_AS((void)run_polytope(PolytopeShape::CAHP1, combo_row("A2:0,0"), {1, 1}),
                    IllegalCombo);
    CHECK_THROWS_AS((void)run_polytope(PolytopeShape::CA66D, combo_row("C1:d=0"), {1, 1}),
                    IllegalCombo);
    CHECK_THROWS_AS((void)run_polytope(PolytopeShape::PrismA, combo_row("C1:d=0"), {1, 1}),
                    IllegalCombo);
}

TEST_CASE("polytope runs are deterministic in the seed") {
    const ComboRow& row = combo_row("C2:1,1,0");
    ConsistencyReport a = run_polytope(PolytopeShape::CAHP2, row, {2, 9});
    ConsistencyReport b = run_polytope(PolytopeShape::CAHP2, row, {2, 9});
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("verification sweep covers every legal pairing") {
    ConsistencyReport rep;
    polytopes_verify(rep, {1, 13});
    CHECK(rep.ok());
    CHECK(rep.total() == 60);  // 10 table rows x 5 shapes + 5 type-A rows x 2
}
