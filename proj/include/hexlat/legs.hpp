// SPDX-License-Identifier: Apache-2.0
//
// Leg functions: linear fractional (or affine) factors attached to the edges
// of a quad, evaluated in complex doubles.  On solutions of the quad the
// product of the legs around a center collapses to 1 (multiplicative rows)
// or their alternating sum to 0 (additive rows).  Four quads meeting at a
// vertex compose into a single four-leg relation on the outer corners.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "hexlat/errors.hpp"
#include "hexlat/families.hpp"
#include "hexlat/report.hpp"
#include "hexlat/sampling.hpp"
#include "hexlat/scalar.hpp"

namespace hexlat {

// Legs are published per face family; quads borrow them in the four roles
// below.  Symmetric quads use the same function in every role.
enum class LegRole { A, AStar, C, CStar };

struct LegSet {
    Family a, a_star, c, c_star;
};

// True for the rows that compose additively instead of multiplicatively.
bool leg_additive(Family leg_family);

// Closed-form leg value.  Throws UnknownRow if the family has no published
// leg and BranchAmbiguity when x sits too close to a branch point of the
// row's sqrt or x + sqrt(x^2 - 1) expression.
Cpx eval_leg(Family leg_family, Cpx x, Cpx y, Cpx t);

// Role table for a quad family.  The elliptic quad has no algebraic legs
// (UnsupportedFamily); its exclusion is recorded by the drivers.
const LegSet& quad_legs(Family quad);
Family leg_for_role(Family quad, LegRole role);

// a-function companion used by the type-C four-leg relations.
Family c_companion_a(Family c_face);

struct ThreeLeg {
    Cpx value;
    bool additive;
};

// Composite of the three legs around one center (0..3 for corners a..d).
ThreeLeg three_leg_value(Family quad, int center, const std::array<Cpx, 4>& v, Cpx al, Cpx be);

// Distance from the composition target (1 multiplicative, 0 additive).
double three_leg_residual(Family quad, int center, const std::array<Cpx, 4>& v, Cpx al,
                          Cpx be);

// Four legs around the center of a face equation, at leg parameters
// (beta, beta - gamma, alpha, alpha - gamma); negate flips all parameters.
double four_leg_residual(Family face, Cpx x, const std::array<Cpx, 4>& v, Cpx al, Cpx be,
                         Cpx ga, bool negate = false);

// Four-leg value on a vertex star's outer corners, with leg parameters
// derived from the two lattice directions: (b1-a2, b2-a2, b1-a1, b2-a1).
Cpx star_four_leg_value(Family face, Cpx x, const std::array<Cpx, 4>& corners, Cpx a1, Cpx a2,
                        Cpx b1, Cpx b2, bool negate = false);

// A solution sample of one quad: corners solve the equation to |value| below
// tol * scale before any legs are evaluated.
struct LegSample {
    std::array<Cpx, 4> v;
    Cpx al, be;
    double tol = 1e-9;
};

LegSample sample_quad_solution(Family quad, Sampler& smp);

enum class StarArrangement { SymmetricQuads, AsymmetricQuads, MixedTrapezoidal };

std::string star_arrangement_name(StarArrangement arr);
StarArrangement star_arrangement_parse(const std::string& s);

struct StarResult {
    double composition_residual;  // composed three-leg factors vs target
    double four_leg_residual;     // outer-corner four-leg vs same target
};

// Builds one random star (four quads sharing a vertex), solving the four
// dependent corners sequentially, then evaluates both sides.
//   SymmetricQuads:   four copies of a symmetric quad; type-A four-leg.
//   AsymmetricQuads:  four asymmetric quads (two trapezoidal); type-C four-leg.
//   MixedTrapezoidal: two symmetric + two trapezoidal asymmetric quads;
//                     type-C four-leg with negated parameters.
StarResult vertex_star_composition(StarArrangement arr, Family family, Sampler& smp);

struct LegOptions {
    int trials = 50;
    std::uint64_t seed = 5;
    double tol = 1e-9;
};

void three_leg_verify(Family quad, ConsistencyReport& report, const LegOptions& opt);
void four_leg_verify(Family face, ConsistencyReport& report, const LegOptions& opt);
void star_verify(StarArrangement arr, Family family, ConsistencyReport& report,
                 const LegOptions& opt);

// Every applicable family and arrangement; elliptic rows are recorded as
// excluded rather than silently skipped.
void legs_verify(ConsistencyReport& report, const LegOptions& opt);

}  // namespace hexlat
