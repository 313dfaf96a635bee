// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "hexlat/lattice.hpp"

using namespace hexlat;

namespace {

std::set<GridPoint> parse_points(const std::string& text) {
    std::set<GridPoint> out;
    std::size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string::npos) {
        int r = 0, c = 0;
        CHECK(std::sscanf(text.c_str() + pos, "(%d,%d)", &r, &c) == 2);
        out.insert({r, c});
        pos = text.find(')', pos);
    }
    return out;
}

struct FixtureLine {
    IvpKind kind;
    int rows, cols, direction;
    std::size_t closure;
    std::set<GridPoint> black;
};

std::vector<FixtureLine> load_fixture() {
    std::ifstream in(std::string(HEXLAT_TEST_DATA_DIR) + "/ivp_patterns_expected.txt");
    REQUIRE(in.good());
    std::vector<FixtureLine> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind, size, dir, clo, black;
        ls >> kind >> size >> dir >> clo >> black;
        FixtureLine f;
        f.kind = ivp_kind_parse(kind);
        CHECK(std::sscanf(size.c_str(), "%dx%d", &f.rows, &f.cols) == 2);
        CHECK(std::sscanf(dir.c_str(), "direction=%d", &f.direction) == 1);
        unsigned long n = 0;
        CHECK(std::sscanf(clo.c_str(), "closure=%lu", &n) == 1);
        f.closure = n;
        f.black = parse_points(black);
        out.push_back(std::move(f));
    }
    REQUIRE(out.size() == 8);
    return out;
}

}  // namespace

TEST_CASE("face geometry") {
    auto fs = lattice_faces(8, 8);
    CHECK(fs.size() == 21);  // 7 x 6 grid positions, even-parity half
    for (const GridFace& f : fs) {
        CHECK((f.r + f.c0) % 2 == 0);
        CHECK(f.r + 1 <= 7);
        CHECK(f.c0 + 2 <= 7);
    }
    auto cs = face_corners({2, 4});
    CHECK(cs[0] == GridPoint{3, 4});
    CHECK(cs[1] == GridPoint{2, 4});
    CHECK(cs[2] == GridPoint{2, 5});
    CHECK(cs[3] == GridPoint{2, 6});
    CHECK(cs[4] == GridPoint{3, 6});
    CHECK(cs[5] == GridPoint{3, 5});
}

TEST_CASE("ivp kinds") {
    for (IvpKind k :
         {IvpKind::Staircase, IvpKind::Corner, IvpKind::Column, IvpKind::Row, IvpKind::Explicit})
        CHECK(ivp_kind_parse(ivp_kind_name(k)) == k);
    CHECK_THROWS_AS(ivp_kind_parse("spiral"), UnknownRow);
    CHECK(default_direction(IvpKind::Staircase) == 4);
    CHECK(default_direction(IvpKind::Corner) == 4);
    CHECK(default_direction(IvpKind::Column) == 5);
    CHECK(default_direction(IvpKind::Row) == 3);
    CHECK_THROWS_AS(default_direction(IvpKind::Explicit), DomainMismatch);
}

TEST_CASE("patterns match the audited fixture") {
    for (const FixtureLine& f : load_fixture()) {
        CAPTURE(ivp_kind_name(f.kind));
        CAPTURE(f.rows);
        IvpSpec spec;
        spec.kind = f.kind;
        spec.rows = f.rows;
        spec.cols = f.cols;
        auto pts = pattern_points(spec);
        CHECK(std::set<GridPoint>(pts.begin(), pts.end()) == f.black);
        CHECK(default_direction(f.kind) == f.direction);
        Closure cl = reachability(f.rows, f.cols, f.black, f.direction);
        CHECK(cl.known.size() == f.closure);
        CHECK_FALSE(cl.fired.empty());
    }
}

TEST_CASE("staircase initial face statistics") {
    IvpSpec spec;  // staircase 8x8
    auto pts = pattern_points(spec);
    std::set<GridPoint> black(pts.begin(), pts.end());
    for (const GridFace& f : lattice_faces(8, 8)) {
        auto cs = face_corners(f);
        std::array<bool, 6> kn{};
        int n = 0;
        for (int k = 0; k < 6; ++k) {
            kn[k] = black.count(cs[k]) != 0;
            n += kn[k] ? 1 : 0;
        }
        CHECK(n <= 4);
        if (n == 4) {
            bool consecutive = false;
            for (int s = 0; s < 6; ++s) {
                bool run = true;
                for (int j = 0; j < 4; ++j)
                    if (!kn[(s + j) % 6]) run = false;
                if (run) consecutive = true;
            }
            CHECK(consecutive);
        }
    }
}

TEST_CASE("pattern too small") {
    // a bare bottom row seeds nothing: every face needs its top-left corner
    IvpSpec spec;
    spec.kind = IvpKind::Explicit;
    spec.direction = 4;
    for (int c = 0; c < 8; ++c) spec.known.push_back({7, c});
    Sampler smp(1);
    auto params = sample_lattice_params(ParamDomain::Additive, smp);
    CHECK_THROWS_AS(init_lattice(spec, HexSystem::type_a(Family::A2_10), params),
                    PatternTooSmall);
}

TEST_CASE("init validation") {
    Sampler smp(2);
    auto params = sample_lattice_params(ParamDomain::Additive, smp);
    HexSystem sys = HexSystem::type_a(Family::A2_10);

    IvpSpec spec;
    spec.rows = 65;
    CHECK_THROWS_AS(init_lattice(spec, sys, params), DomainMismatch);
    spec.rows = 1;
    CHECK_THROWS_AS(init_lattice(spec, sys, params), DomainMismatch);
    spec.rows = 8;
    spec.direction = 6;
    CHECK_THROWS_AS(init_lattice(spec, sys, params), DomainMismatch);
    spec.direction = -1;

    CHECK_THROWS_AS(init_lattice(spec, sys, {params[0], params[0], params[2]}), DomainMismatch);
    CHECK_THROWS_AS(init_lattice(spec, sys, {Rat(0), params[1], params[2]}), DomainMismatch);
    CHECK_THROWS_AS(
        init_lattice(spec, HexSystem::type_c(Family::C3_100, Family::C3_100),
                     {Rat(-1), Rat(2), Rat(3)}),
        DomainMismatch);
    CHECK_THROWS_AS(init_lattice(spec, HexSystem::type_a(Family::A4), params),
                    EllipticUnavailable);
    CHECK_THROWS_AS(sample_lattice_params(ParamDomain::Elliptic, smp), EllipticUnavailable);

    spec.kind = IvpKind::Explicit;
    spec.direction = 4;
    spec.known = {{0, 0}, {9, 9}};
    CHECK_THROWS_AS(init_lattice(spec, sys, params), DomainMismatch);

    HexLattice blank;
    CHECK_THROWS_AS(evolve(blank, sys), DomainMismatch);
}

namespace {

void exact_run(IvpKind kind, const HexSystem& sys, int rows, int cols, std::uint64_t seed) {
    IvpSpec spec;
    spec.kind = kind;
    spec.rows = rows;
    spec.cols = cols;
    spec.seed = seed;

    IvpRunResult run = run_ivp(spec, sys);
    CHECK(run.report.ok());
    CHECK(run.report.failed() == 0);
    CHECK(run.lattice.values.size() == run.lattice.closure.size());

    // a permuted face-processing order must land on the same values exactly
    IvpRunResult scrambled = run_ivp(spec, sys, 1);
    CHECK(scrambled.report.ok());
    CHECK(run.lattice.values == scrambled.lattice.values);

    // determinism: an identical run is bit-identical
    IvpRunResult again = run_ivp(spec, sys);
    CHECK(run.lattice.values == again.lattice.values);
    CHECK(run.lattice.params == again.lattice.params);
}

}  // namespace

TEST_CASE("exact evolution, type A") {
    exact_run(IvpKind::Staircase, HexSystem::type_a(Family::A2_10), 8, 8, 301);
    exact_run(IvpKind::Corner, HexSystem::type_a(Family::A3d1), 8, 8, 305);
    exact_run(IvpKind::Row, HexSystem::type_a(Family::A3d0), 6, 6, 304);
    exact_run(IvpKind::Column, HexSystem::type_a(Family::A2_11), 6, 6, 309);
}

TEST_CASE("exact evolution, type C pairs") {
    exact_run(IvpKind::Corner, HexSystem::type_c(Family::C3_100, Family::C3_100), 6, 6, 302);
    exact_run(IvpKind::Column, HexSystem::type_c(Family::C2_101, Family::C2_110), 6, 6, 303);
    exact_run(IvpKind::Column, HexSystem::type_c(Family::C3_hh0, Family::C3_h0h), 8, 8, 306);
    exact_run(IvpKind::Row, HexSystem::type_c(Family::C2_000, Family::C1_1), 8, 8, 307);
    exact_run(IvpKind::Staircase, HexSystem::type_c(Family::C1_0, Family::C1_0), 8, 8, 308);
}

TEST_CASE("explicit known set reproduces the staircase") {
    IvpSpec stair;
    stair.seed = 77;
    HexSystem sys = HexSystem::type_a(Family::A2_10);
    IvpRunResult a = run_ivp(stair, sys);

    IvpSpec expl;
    expl.kind = IvpKind::Explicit;
    expl.direction = 4;
    expl.seed = 77;
    expl.known = pattern_points(stair);
    IvpRunResult b = run_ivp(expl, sys);
    CHECK(a.lattice.values == b.lattice.values);
}

TEST_CASE("any-direction firing is inconsistent") {
    // Face (2,0) fires leftward (knowns at slots f,a,b,c) and its bottom-right
    // output lands inside the known run of face (3,1); solving that face's
    // remaining corner from one row leaves the other rows nonzero.
    HexSystem sys = HexSystem::type_a(Family::A2_10);
    Sampler smp(7);
    auto params = sample_lattice_params(ParamDomain::Additive, smp);
    RatAdd3 pp{params[0], params[1], params[2]};

    std::map<GridPoint, Rat> vals;
    for (GridPoint p : {GridPoint{3, 0}, GridPoint{2, 0}, GridPoint{2, 1}, GridPoint{3, 1},
                        GridPoint{4, 1}, GridPoint{4, 2}, GridPoint{4, 3}})
        vals[p] = smp.nonzero_rational();

    auto solve_first_row = [&](const GridFace& f, int s) {
        auto cs = face_corners(f);
        std::array<Rat, 6> xs{};
        std::array<bool, 6> have{};
        for (int k = 0; k < 6; ++k)
            if (auto it = vals.find(cs[k]); it != vals.end()) {
                xs[k] = it->second;
                have[k] = true;
            }
        for (int k = 0; k < 6; ++k) {
            if (k == s || hex_missing_slot(k) == s) continue;
            bool ready = true;
            for (int j = 0; j < 6; ++j)
                if (j != hex_missing_slot(k) && j != s && !have[j]) ready = false;
            if (!ready) continue;
            vals[cs[s]] = hex_solve_slot(sys, k, s, xs, pp);
            return;
        }
        FAIL("no solvable row");
    };

    solve_first_row({2, 0}, 3);
    solve_first_row({2, 0}, 4);  // writes (3,2), inside face (3,1)'s known run
    solve_first_row({3, 1}, 3);

    auto cs = face_corners({3, 1});
    std::array<Rat, 6> xs;
    for (int k = 0; k < 6; ++k) xs[k] = vals.at(cs[k]);
    int nonzero = 0;
    for (int k = 0; k < 6; ++k)
        if (hex_row_value(sys, k, xs, pp) != 0) ++nonzero;
    CHECK(nonzero > 0);
}

TEST_CASE("exports") {
    IvpSpec spec;
    spec.seed = 11;
    HexSystem sys = HexSystem::type_a(Family::A2_10);
    IvpRunResult run = run_ivp(spec, sys);

    auto j = lattice_to_json(run.lattice, sys);
    CHECK(j["rows"] == 8);
    CHECK(j["cols"] == 8);
    CHECK(j["system"] == sys.name());
    CHECK(j["direction"] == 4);
    CHECK(j["parameter_map"].contains("vertical"));
    CHECK(j["vertices"].size() == run.lattice.values.size());
    for (const auto& v : j["vertices"]) {
        CHECK(v.contains("value"));
        CHECK(rat_parse(v["value"].get<std::string>()) ==
              run.lattice.values.at({v["row"].get<int>(), v["col"].get<int>()}));
    }
    std::size_t complete = 0;
    for (const auto& f : j["faces"]) {
        if (f["complete"].get<bool>()) {
            ++complete;
            CHECK(f["residuals_zero"].get<bool>());
        }
    }
    CHECK(complete > 0);

    std::string csv = lattice_to_csv(run.lattice);
    CHECK(csv.rfind("row,col,value\n", 0) == 0);
    std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == run.lattice.values.size() + 1);
}

TEST_CASE("hyperbolic json uses Z-values") {
    IvpSpec spec;
    spec.kind = IvpKind::Corner;
    spec.rows = 6;
    spec.cols = 6;
    spec.seed = 5;
    HexSystem sys = HexSystem::type_c(Family::C3_100, Family::C3_100);
    IvpRunResult run = run_ivp(spec, sys);
    auto j = lattice_to_json(run.lattice, sys);
    CHECK(j["domain"] == "hyperbolic");
    CHECK(rat_parse(j["parameter_map"]["vertical"].get<std::string>()) > 0);
}
