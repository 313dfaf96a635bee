// SPDX-License-Identifier: Apache-2.0
//
// Family-level operations: plain evaluation, the trapezoidal reindexing of
// type-H quads, extraction of the face equations' linear-in-center
// coefficient, the coefficient-to-quad correspondence, and the square
// symmetries of both equation shapes.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hexlat/errors.hpp"
#include "hexlat/families.hpp"
#include "hexlat/params.hpp"
#include "hexlat/polys.hpp"
#include "hexlat/report.hpp"
#include "hexlat/sampling.hpp"

namespace hexlat {

template <class PP>
typename PP::scalar eval_quad(const EquationSpec& spec,
                              std::array<typename PP::scalar, 4> v, const PP& pp) {
    if (spec.swap_ab_cd) {
        std::swap(v[0], v[1]);
        std::swap(v[2], v[3]);
    }
    return poly::quad_value(spec.family, v, pp);
}

template <class PP>
typename PP::scalar eval_face(Family f, const typename PP::scalar& x,
                              const std::array<typename PP::scalar, 4>& v, const PP& pp) {
    return poly::face_value(f, x, v, pp);
}

// Trapezoidal variant of a quad: corners reindexed (a, d, c, b) and
// parameters replaced by (be - al, be).  Applying it twice returns the
// original equation.
constexpr Mat2 kTrapezoidParams = {{{-1, 1}, {0, 1}}};

template <class PP>
typename PP::scalar trapezoidal(Family f, const std::array<typename PP::scalar, 4>& v,
                                const PP& pp) {
    std::array<typename PP::scalar, 4> w = {v[0], v[3], v[2], v[1]};
    auto mp = map_params(pp, kTrapezoidParams);
    return poly::quad_value(f, w, mp);
}

// Linear-in-center coefficient of a face equation, from the published
// closed form, cross-checked against the centered second difference of the
// full equation.  Exact domains only.
template <class PP>
typename PP::scalar extract_p1(Family f, const std::array<typename PP::scalar, 4>& v,
                               const PP& pp) {
    using S = typename PP::scalar;
    S published = poly::face_p1_value(f, v, pp);
    S at_plus = poly::face_value(f, S(1), v, pp);
    S at_minus = poly::face_value(f, S(-1), v, pp);
    S interpolated = (at_plus - at_minus) / S(2);
    if (!(interpolated == published))
        throw Error("extract_p1: closed form disagrees with interpolation for " +
                    family_name(f));
    return published;
}

// --- correspondence -----------------------------------------------------------

// Face family -> quad family reached by its linear coefficient under the
// corner pattern (xa, -xd, xc, xb) and the parameter substitution
// (al, al - be, al - be).  swap_ac_bd: quad side evaluated at (c, d, a, b).
struct CorrespondenceRow {
    Family face;
    Family quad;
    bool swap_ac_bd;
};

const std::vector<CorrespondenceRow>& correspondence_rows();
const CorrespondenceRow& correspondence_row_for(Family face);

// One parameter draw: fits the proportionality factor on the first value
// sample where both sides are nonzero, then requires exact equality on the
// remaining samples.  Returns the fitted factor.  Throws
// CorrespondenceFailed on mismatch or if every sample is degenerate.
Rat abs_correspondence_check(const CorrespondenceRow& row, Sampler& smp, int value_draws = 6);

struct CorrespondenceOptions {
    int trials = 50;  // parameter draws
    std::uint64_t seed = 3;
    int value_draws = 6;
};

void correspondence_verify(const CorrespondenceRow& row, ConsistencyReport& report,
                           const CorrespondenceOptions& opt);

// --- square symmetries ---------------------------------------------------------

enum class SymmetryKind { QuadSym1, QuadSym2, FaceSym1, FaceSym2, FaceSym3 };

std::string symmetry_kind_name(SymmetryKind k);
SymmetryKind symmetry_kind_parse(const std::string& s);

// Whether the theory claims the residual vanishes for this (kind, family).
// Quad transposition (sym1) is the designated failure for epsilon = 1 type-H
// quads; the second and third face symmetries hold only for the first kind.
bool symmetry_expected(SymmetryKind k, Family f);

namespace detail_sym {
constexpr Mat2 kQuadSwapParams = {{{0, 1}, {1, 0}}};
constexpr Mat3 kFaceSym1Params = {{{1, 0, -1}, {0, 1, -1}, {0, 0, -1}}};
constexpr Mat3 kFaceSym2Params = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
constexpr Mat3 kFaceSym3Params = {{{-1, 0, 0}, {-1, 0, 1}, {-1, 1, 0}}};
}  // namespace detail_sym

// Residual of the claimed identity (transformed equation minus the pinned
// factor times the original).  Throws NotApplicable for arity mismatches and
// for the third face symmetry of the elliptic face family, which is not a
// constant-factor identity.  The quad overload takes no center value.
template <class PP>
typename PP::scalar symmetry_residual(SymmetryKind k, Family f,
                                      const std::array<typename PP::scalar, 4>& v,
                                      const PP& pp) {
    using S = typename PP::scalar;
    if (family_is_face(f)) throw NotApplicable("quad symmetry on a face family");
    if (k == SymmetryKind::QuadSym1) {
        std::array<S, 4> w = {v[1], v[0], v[3], v[2]};
        return poly::quad_value(f, w, pp) - poly::quad_value(f, v, pp);
    }
    if (k == SymmetryKind::QuadSym2) {
        std::array<S, 4> w = {v[3], v[1], v[2], v[0]};
        auto mp = map_params(pp, detail_sym::kQuadSwapParams);
        S factor = f == Family::Q4 ? S(1) : S(-1);
        return poly::quad_value(f, w, mp) - factor * poly::quad_value(f, v, pp);
    }
    throw NotApplicable("face symmetry kind on a quad family");
}

template <class PP>
typename PP::scalar symmetry_residual(SymmetryKind k, Family f,
                                      const typename PP::scalar& x,
                                      const std::array<typename PP::scalar, 4>& v,
                                      const PP& pp) {
    using S = typename PP::scalar;
    if (!family_is_face(f)) throw NotApplicable("quad family passed to a face symmetry");
    if (k == SymmetryKind::FaceSym1) {
        std::array<S, 4> w = {v[1], v[0], v[3], v[2]};
        auto mp = map_params(pp, detail_sym::kFaceSym1Params);
        S factor = family_letter(f) == 'C' && family_domain(f) == ParamDomain::Hyperbolic
                       ? -pp.Z(0, 0, -1)
                       : S(-1);
        return poly::face_value(f, x, w, mp) - factor * poly::face_value(f, x, v, pp);
    }
    if (k == SymmetryKind::FaceSym2) {
        std::array<S, 4> w = {v[2], v[3], v[0], v[1]};
        auto mp = map_params(pp, detail_sym::kFaceSym2Params);
        return poly::face_value(f, x, w, mp) + poly::face_value(f, x, v, pp);
    }
    if (k == SymmetryKind::FaceSym3) {
        if (f == Family::A4)
            throw NotApplicable(
                "third face symmetry of the elliptic face is not a constant-factor identity");
        std::array<S, 4> w = {v[3], v[1], v[2], v[0]};
        auto mp = map_params(pp, detail_sym::kFaceSym3Params);
        return poly::face_value(f, x, w, mp) + poly::face_value(f, x, v, pp);
    }
    throw NotApplicable("quad symmetry kind on a face family");
}

struct SymmetryOptions {
    int trials = 50;
    std::uint64_t seed = 4;
    double tol = 1e-8;  // complex domain
};

// Verifies every applicable symmetry of one family; claimed identities must
// vanish and designated failures must produce a nonzero residual.
void symmetry_verify(Family f, ConsistencyReport& report, const SymmetryOptions& opt,
                     const EllipticContext* ctx = nullptr);

// Spread of the fitted corner-wise proportionality for the third square
// symmetry of the elliptic face at fixed center value (the identity holds
// projectively rather than with a constant factor).
double elliptic_face_sym3_spread(const EllipticContext& ctx, std::uint64_t seed, int trials);

}  // namespace hexlat
