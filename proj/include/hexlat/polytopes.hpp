// SPDX-License-Identifier: Apache-2.0
//
// Consistency of hex systems and quad equations around polytopes with
// hexagonal and quadrilateral faces.  Each scenario is a published recipe:
// sample a set of initial vertices, solve the remaining vertices one
// equation at a time in a fixed order, then evaluate every leftover
// equation.  On a consistent combination all the leftover equations vanish
// identically; the engine verifies this on random exact-rational data.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hexlat/errors.hpp"
#include "hexlat/families.hpp"
#include "hexlat/report.hpp"

namespace hexlat {

// One row of the legal-combination table.  Type-C rows pair a (C, Cbar) hex
// system with an asymmetric quad H (optionally argument-swapped) and the two
// symmetric quads Q, Qstar.  Type-A rows pair a type-A hex system with the
// single symmetric quad its faces reduce to.
struct ComboRow {
    bool type_a = false;

    EquationSpec c{}, cbar{};   // type-C hex pair
    EquationSpec h{};           // asymmetric quad; carries the swap flag
    EquationSpec q{}, qstar{};  // symmetric quads

    Family a_family{};          // type-A hex system
    Family a_quad{};            // its quad partner

    bool hyperbolic() const;
    // Row key: the C-column family name, or the A-family name.
    std::string name() const;
};

// Ten type-C rows followed by five type-A rows, in published order.
const std::vector<ComboRow>& combo_table();
const ComboRow& combo_row(std::size_t index);
const ComboRow& combo_row(const std::string& name);

enum class PolytopeShape { CAHP1, CAHP2, CAED1, CAED2, CATO, PrismA, CA66D };

std::string polytope_shape_name(PolytopeShape shape);
PolytopeShape polytope_shape_parse(const std::string& name);

// The quad slot of a scenario step: the row's symmetric quads, the
// asymmetric quad, or the asymmetric quad in its upper position (arguments
// (a, d, c, b) with the first parameter replaced by its offset from the
// second).
enum class ScenarioQuad { Q, Qstar, H, Hu };

struct ScenarioStep {
    bool check = false;      // otherwise a solve step
    bool hex = false;        // six-name hex system step
    ScenarioQuad quad = ScenarioQuad::Q;
    std::vector<std::string> names;    // 6 (hex) or 4 (quad) vertex names
    std::vector<std::string> params;   // 3 (hex) or 2 (quad) parameter names
    std::string unknown;               // quad solve target
    std::string text;                  // source line, used in reports
};

struct PolytopeScenario {
    PolytopeShape shape;
    std::vector<std::string> params;    // parameter names to sample
    std::vector<std::string> initial;   // vertices sampled up front
    std::vector<ScenarioStep> steps;    // empty for the prism-built scenarios
};

// Parsed, structurally audited scenario data.  The audit replays the step
// list over the initial known set: every solve determines exactly the
// still-unknown names, every check reads only known names, and the final
// known set covers every vertex mentioned.
const PolytopeScenario& polytope_scenario(PolytopeShape shape);

// The eight-equation prism bundle between two hexagons: both hex systems
// plus six quads whose vertical edges all carry one extra parameter.
struct PrismSystem {
    std::array<std::string, 6> x, y;
    std::array<std::string, 3> hex_params;
    std::string vertical;

    struct QuadRow {
        std::array<std::string, 4> corners;
        std::string pa, pb;
    };
    std::array<QuadRow, 6> quad_rows() const;
};

struct PolytopeOptions {
    int trials = 50;
    std::uint64_t seed = 6;
};

// Runs the scenario against one combination row: per trial, sample
// parameters and initial values, execute the solve steps, and record an
// exact-zero entry per check equation.  Draws that hit a singular solve are
// resampled a bounded number of times.  Throws IllegalCombo when the row
// does not fit the shape (wrong type, or a hex pair that does not close).
ConsistencyReport run_polytope(PolytopeShape shape, const ComboRow& combo,
                               const PolytopeOptions& opt = {});

// Every legal (shape, row) pairing at the given trial counts.
void polytopes_verify(ConsistencyReport& report, const PolytopeOptions& opt);

}  // namespace hexlat
