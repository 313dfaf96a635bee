// SPDX-License-Identifier: Apache-2.0
//
// Six-equation systems on a hexagon.  Vertex slots 0..5 stand for the cyclic
// positions a..f; row k is centered at slot k, reads four corners, and never
// touches the opposite slot (k+3) mod 6.  A system is consistent when all
// six rows vanish simultaneously; four consecutive values determine the
// remaining two.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexlat/errors.hpp"
#include "hexlat/families.hpp"
#include "hexlat/params.hpp"
#include "hexlat/polys.hpp"
#include "hexlat/report.hpp"

namespace hexlat {

enum class HexVariant { TypeA, TypeC };

struct HexSystem {
    HexVariant variant;
    Family a_family{};             // TypeA
    Family c_family{};             // TypeC: rows b, c, d
    Family cbar_family{};          // TypeC: rows a, e, f

    static HexSystem type_a(Family f);
    // Permissive: illegal pairs are constructible so their inconsistency can
    // be demonstrated; legality lives in is_legal_c_pair().
    static HexSystem type_c(Family c, Family cbar);

    Family row_family(int k) const;
    ParamDomain domain() const;
    std::string name() const;
};

// Pairs of second-kind face families that close up into a consistent system,
// in either order.
bool is_legal_c_pair(Family c, Family cbar);

struct HexRow {
    std::array<int, 4> corners;  // slots supplying (xa, xb, xc, xd)
    Mat3 params;                 // row parameter triple in combination space
    bool use_cbar;               // TypeC only
};

const HexRow& hex_row(HexVariant variant, int k);

constexpr int hex_missing_slot(int k) { return (k + 3) % 6; }

inline bool solve_singular(const Rat& lead, double) { return lead == 0; }
inline bool solve_singular(const Cpx& lead, double tol) { return std::abs(lead) < tol; }

template <class PP>
typename PP::scalar hex_row_value(const HexSystem& sys, int k,
                                  const std::array<typename PP::scalar, 6>& xs, const PP& pp) {
    const HexRow& row = hex_row(sys.variant, k);
    auto rp = map_params(pp, row.params);
    std::array<typename PP::scalar, 4> corners = {xs[row.corners[0]], xs[row.corners[1]],
                                                  xs[row.corners[2]], xs[row.corners[3]]};
    return poly::face_value(sys.row_family(k), xs[k], corners, rp);
}

// Row value together with a magnitude scale for relative residuals; only
// meaningful for the complex domain.
template <class PP>
std::pair<typename PP::scalar, double> hex_row_value_scaled(
    const HexSystem& sys, int k, const std::array<typename PP::scalar, 6>& xs, const PP& pp) {
    const HexRow& row = hex_row(sys.variant, k);
    auto rp = map_params(pp, row.params);
    std::array<typename PP::scalar, 4> corners = {xs[row.corners[0]], xs[row.corners[1]],
                                                  xs[row.corners[2]], xs[row.corners[3]]};
    if (sys.row_family(k) == Family::A4) return poly::a4_face_scaled(xs[k], corners, rp);
    typename PP::scalar v = poly::face_value(sys.row_family(k), xs[k], corners, rp);
    return {v, 1.0};
}

// Solves row `k` for corner `slot` by a two-point probe; rows are affine in
// every corner slot.  The center slot k and the missing slot are rejected.
template <class PP>
typename PP::scalar hex_solve_slot(const HexSystem& sys, int k, int slot,
                                   std::array<typename PP::scalar, 6> xs, const PP& pp,
                                   double tol = 1e-12) {
    using S = typename PP::scalar;
    if (slot == k || slot == hex_missing_slot(k))
        throw DomainMismatch("hex_solve_slot: row " + std::to_string(k) +
                             " is not affine in slot " + std::to_string(slot));
    xs[slot] = S(0);
    S f0 = hex_row_value(sys, k, xs, pp);
    xs[slot] = S(1);
    S f1 = hex_row_value(sys, k, xs, pp);
    S lead = f1 - f0;
    if (solve_singular(lead, tol))
        throw SingularSolve("hex_solve_slot: zero leading coefficient in row " +
                            std::to_string(k) + " slot " + std::to_string(slot));
    return -f0 / lead;
}

// Canonical forward step: knowns at slots i..i+3 (cyclic); the row missing
// slot i+5 determines slot i+4, then the row missing slot i+4 determines
// slot i+5.
template <class PP>
std::array<typename PP::scalar, 6> hex_solve_ivp(const HexSystem& sys, int i,
                                                 const std::array<typename PP::scalar, 4>& known,
                                                 const PP& pp, double tol = 1e-12) {
    using S = typename PP::scalar;
    std::array<S, 6> xs{S(0), S(0), S(0), S(0), S(0), S(0)};
    for (int j = 0; j < 4; ++j) xs[(i + j) % 6] = known[j];
    int u1 = (i + 4) % 6, u2 = (i + 5) % 6;
    xs[u1] = hex_solve_slot(sys, (i + 2) % 6, u1, xs, pp, tol);
    xs[u2] = hex_solve_slot(sys, (i + 1) % 6, u2, xs, pp, tol);
    return xs;
}

template <class PP>
std::pair<typename PP::scalar, typename PP::scalar> hex_solve_pair(
    const HexSystem& sys, int i, const std::array<typename PP::scalar, 4>& known, const PP& pp,
    double tol = 1e-12) {
    auto xs = hex_solve_ivp(sys, i, known, pp, tol);
    return {xs[(i + 4) % 6], xs[(i + 5) % 6]};
}

// All admissible two-step solve orders from knowns i..i+3: one row choice
// for whichever unknown goes first, then any of the four rows affine in the
// second unknown.  Returns the completed vector for each path.
template <class PP>
std::vector<std::array<typename PP::scalar, 6>> hex_solve_all_paths(
    const HexSystem& sys, int i, const std::array<typename PP::scalar, 4>& known, const PP& pp,
    double tol = 1e-12) {
    using S = typename PP::scalar;
    std::array<S, 6> base{S(0), S(0), S(0), S(0), S(0), S(0)};
    for (int j = 0; j < 4; ++j) base[(i + j) % 6] = known[j];
    int p = (i + 4) % 6, q = (i + 5) % 6;

    std::vector<std::array<S, 6>> out;
    auto run = [&](int first, int row1, int second) {
        auto xs = base;
        xs[first] = hex_solve_slot(sys, row1, first, xs, pp, tol);
        for (int row2 = 0; row2 < 6; ++row2) {
            if (row2 == second || row2 == hex_missing_slot(second)) continue;
            auto ys = xs;
            ys[second] = hex_solve_slot(sys, row2, second, ys, pp, tol);
            out.push_back(ys);
        }
    };
    // The only row affine in `first` that does not read the other unknown is
    // the one missing it.
    run(p, (q + 3) % 6, q);
    run(q, (p + 3) % 6, p);
    return out;
}

// Solve order for the relaxed seeding (three consecutive knowns plus the
// slot opposite the middle gap): lexicographically first admissible
// (first unknown, row, second unknown, row) quadruple.
struct RelaxedOrder {
    int first_slot, first_row, second_slot, second_row;
};

RelaxedOrder relaxed_solve_order(int i);

template <class PP>
std::array<typename PP::scalar, 6> hex_solve_relaxed(const HexSystem& sys, int i,
                                                     const std::array<typename PP::scalar, 4>& known,
                                                     const PP& pp, double tol = 1e-12) {
    using S = typename PP::scalar;
    std::array<S, 6> xs{S(0), S(0), S(0), S(0), S(0), S(0)};
    xs[i % 6] = known[0];
    xs[(i + 1) % 6] = known[1];
    xs[(i + 2) % 6] = known[2];
    xs[(i + 4) % 6] = known[3];
    RelaxedOrder ord = relaxed_solve_order(i);
    xs[ord.first_slot] = hex_solve_slot(sys, ord.first_row, ord.first_slot, xs, pp, tol);
    xs[ord.second_slot] = hex_solve_slot(sys, ord.second_row, ord.second_slot, xs, pp, tol);
    return xs;
}

// --- verification drivers ----------------------------------------------------

struct CahOptions {
    int trials = 100;
    std::uint64_t seed = 1;
    double tol = 1e-8;     // relative residual bound, complex domain only
    bool relaxed = false;  // also exercise the three-plus-one seeding
    bool all_paths = true;
};

// Samples inputs, completes the hexagon from four consecutive values, and
// records row residuals plus agreement across every admissible solve order.
// The elliptic context is required for (and only used by) complex-domain
// systems.
void cah_verify(const HexSystem& sys, ConsistencyReport& report, const CahOptions& opt,
                const EllipticContext* ctx = nullptr);

// Value permutation plus parameter substitution that maps solutions of one
// hex system onto solutions of a (possibly partner-swapped) hex system.
struct HexTransform {
    const char* name;
    std::array<int, 6> perm;  // transformed slot k takes the value at perm[k]
    Mat3 params;
    bool valid_for_c;  // claimed to hold for second-kind systems
    bool swaps_c_pair; // target system has the (C, Cbar) roles exchanged
};

const std::array<HexTransform, 4>& hex_transforms();

struct HexSymmetryOptions {
    int trials = 50;
    std::uint64_t seed = 2;
    double tol = 1e-8;
};

// For each transform: solved sample -> transformed vector must satisfy the
// target system.  For second-kind systems the single-step rotation is the
// designated non-symmetry and must leave nonzero residuals.
void hex_symmetry_check(const HexSystem& sys, ConsistencyReport& report,
                        const HexSymmetryOptions& opt, const EllipticContext* ctx = nullptr);

}  // namespace hexlat
