// SPDX-License-Identifier: Apache-2.0
//
// Brick-wall lattice of hexagonal faces with direction-locked evolution.
//
// Vertices live on an integer grid (row r, column c).  Faces sit at (r, c0)
// with r + c0 even; the six corners of a face, in cyclic slot order a..f, are
//   a = (r+1, c0)    bottom-left      b = (r, c0)      top-left
//   c = (r, c0+1)    top-middle       d = (r, c0+2)    top-right
//   e = (r+1, c0+2)  bottom-right     f = (r+1, c0+1)  bottom-middle
// Vertical edges carry the third parameter; a horizontal edge (r,c)-(r,c+1)
// carries the first parameter when r + c is even and the second otherwise.
// Read cyclically around any face this gives the parameter labels
// (third, first, second, third, first, second), so opposite edges of every
// face always share a parameter.
//
// Evolution is direction-locked: a direction u in 0..5 declares slots
// u..u+3 (cyclic) the known run of every face and slots u+4, u+5 the solved
// pair.  Firing faces in arbitrary directions over-determines shared
// vertices and is generically inconsistent; under a fixed direction each
// vertex is solvable by at most one face, the fill is independent of the
// face-processing order, and every completed face satisfies all six of its
// equations exactly.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexlat/errors.hpp"
#include "hexlat/hexsys.hpp"
#include "hexlat/report.hpp"
#include "hexlat/sampling.hpp"
#include "hexlat/scalar.hpp"

namespace hexlat {

inline constexpr int kMaxLatticeDim = 64;

struct GridPoint {
    int r = 0, c = 0;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

struct GridFace {
    int r = 0, c0 = 0;
    friend auto operator<=>(const GridFace&, const GridFace&) = default;
};

// All faces of an R x C grid in row-major order.
std::vector<GridFace> lattice_faces(int rows, int cols);

std::array<GridPoint, 6> face_corners(const GridFace& f);

enum class IvpKind { Staircase, Corner, Column, Row, Explicit };

std::string ivp_kind_name(IvpKind kind);
IvpKind ivp_kind_parse(const std::string& name);

// The locked evolution direction each published pattern was drawn for.
// Explicit known sets have no default and must set IvpSpec::direction.
int default_direction(IvpKind kind);

struct IvpSpec {
    IvpKind kind = IvpKind::Staircase;
    int rows = 8;
    int cols = 8;
    std::uint64_t seed = 0;
    int direction = -1;               // -1: per-kind default
    std::vector<GridPoint> known;     // Explicit only
};

// Black-vertex set of the pattern, sorted row-major.  Explicit specs are
// bounds-checked and deduplicated.
std::vector<GridPoint> pattern_points(const IvpSpec& spec);

struct Closure {
    std::set<GridPoint> known;     // black plus everything reachable
    std::vector<GridFace> fired;   // faces that fired, in discovery order
};

// Reachability of the abstract evolution: a face fires when its four known-
// run slots are known and at least one solved-pair slot is not.
Closure reachability(int rows, int cols, const std::set<GridPoint>& black, int direction);

struct HexLattice {
    int rows = 0, cols = 0;
    int direction = 4;
    std::uint64_t seed = 0;
    ParamDomain domain = ParamDomain::Additive;
    std::array<Rat, 3> params{};   // additive values, or Z-values when hyperbolic
    std::set<GridPoint> black;
    std::set<GridPoint> closure;
    std::map<GridPoint, Rat> values;

    bool has(GridPoint p) const { return values.count(p) != 0; }
};

// Three distinct parameters in the domain's value range (nonzero additive
// values, or positive Z-values).  Elliptic systems have no exact lattice
// arithmetic here.
std::array<Rat, 3> sample_lattice_params(ParamDomain domain, Sampler& smp);

// Builds the initial state: pattern vertices get random nonzero values drawn
// from (spec.seed, salt), everything else stays unknown.  Fails with
// PatternTooSmall when no face can fire at all.
HexLattice init_lattice(const IvpSpec& spec, const HexSystem& system,
                        const std::array<Rat, 3>& params, std::uint64_t salt = 0);

// Direction-locked fill by repeated rescans of the face list (scramble != 0
// permutes the scan order; the result must not change).  Every duplicate
// determination and every completed face is recorded in the report; the
// completed lattice is the mutated argument.
ConsistencyReport evolve(HexLattice& lattice, const HexSystem& system, unsigned scramble = 0);

struct IvpRunResult {
    HexLattice lattice;
    ConsistencyReport report;
};

// init + evolve with bounded resampling of parameters and initial values
// whenever a draw runs into a singular solve.
IvpRunResult run_ivp(const IvpSpec& spec, const HexSystem& system, unsigned scramble = 0,
                     int attempts = 100);

// Export: dimensions, parameter map, vertex values as exact "p/q" strings,
// and a residuals-vanish boolean per completed face.
nlohmann::ordered_json lattice_to_json(const HexLattice& lattice, const HexSystem& system);

// "row,col,value" lines for the known vertices, row-major.
std::string lattice_to_csv(const HexLattice& lattice);

}  // namespace hexlat
