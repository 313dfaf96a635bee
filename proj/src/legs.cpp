// SPDX-License-Identifier: Apache-2.0

#include "hexlat/legs.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

#include "hexlat/params.hpp"
#include "hexlat/polys.hpp"

namespace hexlat {

namespace {

constexpr double kBranchTol = 1e-9;   // eval_leg rejection
constexpr double kGuardDist = 1e-3;   // sampling keeps branch arguments this far out

Cpx xbar(Cpx x) {
    if (std::abs(x * x - 1.0) < kBranchTol)
        throw BranchAmbiguity("leg argument too close to x^2 = 1");
    return x + std::sqrt(x * x - 1.0);
}

Cpx half_root(Cpx x) {
    if (std::abs(x) < kBranchTol) throw BranchAmbiguity("leg argument too close to 0");
    return std::sqrt(x);
}

Cpx zexp(Cpx t) { return std::exp(t); }

}  // namespace

bool leg_additive(Family leg_family) {
    return leg_family == Family::A2_00 || leg_family == Family::C2_000 ||
           leg_family == Family::C1_0;
}

Cpx eval_leg(Family f, Cpx x, Cpx y, Cpx t) {
    switch (f) {
        case Family::A3d1: {
            Cpx zx = xbar(x), zt = zexp(t);
            return (1.0 + zt * zt * zx * zx - 2.0 * zt * zx * y) /
                   (zt * zt + zx * zx - 2.0 * zt * zx * y);
        }
        case Family::A3d0: {
            Cpx zt = zexp(t);
            return (zt * x - y) / (x - zt * y);
        }
        case Family::A2_11: {
            Cpx s = half_root(x);
            return ((s - t) * (s - t) - y) / ((s + t) * (s + t) - y);
        }
        case Family::A2_10:
            return (x - y + t) / (x - y - t);
        case Family::A2_00:
            return t / (x - y);
        case Family::C3_hh0: {
            Cpx zx = xbar(x), zt = zexp(t);
            return (1.0 - zt * zx * y) / (zx - zt * y);
        }
        case Family::C3_h0h:
            return zexp(-t) + zexp(t) * x * x - 2.0 * x * y;
        case Family::C3_100:
            return x * y - zexp(-t);
        case Family::C3_000:
            return y;
        case Family::C2_110: {
            Cpx s = half_root(x);
            return (y - s + t) / (y + s + t);
        }
        case Family::C2_101:
            return (x + t) * (x + t) - y;
        case Family::C2_100:
            return x + y + t;
        case Family::C1_1:
            return y;
        case Family::C2_000:
            return (y + t) / (2.0 * x);
        case Family::C1_0:
            return -y / 2.0;
        default:
            throw UnknownRow("no published leg for " + family_name(f));
    }
}

const LegSet& quad_legs(Family quad) {
    static const std::pair<Family, LegSet> table[] = {
        {Family::Q3d1, {Family::A3d1, Family::A3d1, Family::A3d1, Family::A3d1}},
        {Family::Q3d0, {Family::A3d0, Family::A3d0, Family::A3d0, Family::A3d0}},
        {Family::Q2, {Family::A2_11, Family::A2_11, Family::A2_11, Family::A2_11}},
        {Family::Q1d1, {Family::A2_10, Family::A2_10, Family::A2_10, Family::A2_10}},
        {Family::Q1d0, {Family::A2_00, Family::A2_00, Family::A2_00, Family::A2_00}},
        {Family::H3_11, {Family::A3d1, Family::A3d0, Family::C3_hh0, Family::C3_h0h}},
        {Family::H3_10, {Family::A3d0, Family::A3d0, Family::C3_100, Family::C3_100}},
        {Family::H3_00, {Family::A3d0, Family::A3d0, Family::C3_000, Family::C3_000}},
        {Family::H2_1, {Family::A2_11, Family::A2_10, Family::C2_110, Family::C2_101}},
        {Family::H2_0, {Family::A2_10, Family::A2_10, Family::C2_100, Family::C2_100}},
        {Family::H1_1, {Family::A2_10, Family::A2_00, Family::C1_1, Family::C2_000}},
        {Family::H1_0, {Family::A2_00, Family::A2_00, Family::C1_0, Family::C1_0}},
    };
    for (const auto& [q, legs] : table)
        if (q == quad) return legs;
    throw UnsupportedFamily("no leg table for " + family_name(quad));
}

Family leg_for_role(Family quad, LegRole role) {
    const LegSet& legs = quad_legs(quad);
    switch (role) {
        case LegRole::A: return legs.a;
        case LegRole::AStar: return legs.a_star;
        case LegRole::C: return legs.c;
        case LegRole::CStar: return legs.c_star;
    }
    throw Error("unreachable leg role");
}

Family c_companion_a(Family c_face) {
    switch (c_face) {
        case Family::C3_hh0: return Family::A3d1;
        case Family::C3_h0h: return Family::A3d0;
        case Family::C3_100: return Family::A3d0;
        case Family::C3_000: return Family::A3d0;
        case Family::C2_110: return Family::A2_11;
        case Family::C2_101: return Family::A2_10;
        case Family::C2_100: return Family::A2_10;
        case Family::C1_1: return Family::A2_10;
        case Family::C2_000: return Family::A2_00;
        case Family::C1_0: return Family::A2_00;
        default: throw UnknownRow("no companion a-legs for " + family_name(c_face));
    }
}

ThreeLeg three_leg_value(Family quad, int center, const std::array<Cpx, 4>& v, Cpx al, Cpx be) {
    if (center < 0 || center > 3) throw DomainMismatch("three_leg_value: center must be 0..3");
    const LegSet& legs = quad_legs(quad);
    const bool is_h = family_letter(quad) == 'H';

    struct Arg {
        Cpx x, y, t;
    };
    std::array<Arg, 3> args;
    std::array<Family, 3> funs;
    switch (center) {
        case 0:
            args = {Arg{v[0], v[2], be}, Arg{v[0], v[1], al}, Arg{v[0], v[3], be - al}};
            funs = is_h ? std::array<Family, 3>{legs.c_star, legs.c_star, legs.a_star}
                        : std::array<Family, 3>{legs.a, legs.a, legs.a};
            break;
        case 1:
            args = {Arg{v[1], v[0], al}, Arg{v[1], v[3], be}, Arg{v[1], v[2], al - be}};
            funs = is_h ? std::array<Family, 3>{legs.c, legs.c, legs.a}
                        : std::array<Family, 3>{legs.a, legs.a, legs.a};
            break;
        case 2:
            args = {Arg{v[2], v[3], al}, Arg{v[2], v[0], be}, Arg{v[2], v[1], al - be}};
            funs = is_h ? std::array<Family, 3>{legs.c, legs.c, legs.a}
                        : std::array<Family, 3>{legs.a, legs.a, legs.a};
            break;
        default:
            args = {Arg{v[3], v[1], be}, Arg{v[3], v[2], al}, Arg{v[3], v[0], be - al}};
            funs = is_h ? std::array<Family, 3>{legs.c_star, legs.c_star, legs.a_star}
                        : std::array<Family, 3>{legs.a, legs.a, legs.a};
            break;
    }

    std::array<Cpx, 3> w;
    for (int i = 0; i < 3; ++i) w[i] = eval_leg(funs[i], args[i].x, args[i].y, args[i].t);
    const bool additive = leg_additive(funs[0]);
    if (additive) return {w[0] - w[1] - w[2], true};
    return {w[0] / (w[1] * w[2]), false};
}

double three_leg_residual(Family quad, int center, const std::array<Cpx, 4>& v, Cpx al,
                          Cpx be) {
    ThreeLeg t = three_leg_value(quad, center, v, al, be);
    return std::abs(t.value - (t.additive ? Cpx(0) : Cpx(1)));
}

namespace {

struct FourLegFuns {
    Family a, c;
    bool additive;
};

FourLegFuns four_leg_funs(Family face) {
    if (family_letter(face) == 'A') {
        if (face == Family::A4) throw UnsupportedFamily("elliptic legs are not implemented");
        return {face, face, leg_additive(face)};
    }
    if (family_letter(face) == 'C') return {c_companion_a(face), face, leg_additive(face)};
    throw UnknownRow("four-leg relation needs a face family, got " + family_name(face));
}

Cpx four_leg_value(Family face, Cpx x, const std::array<Cpx, 4>& v, Cpx ta, Cpx tb, Cpx tc,
                   Cpx td, bool negate, bool& additive) {
    FourLegFuns f = four_leg_funs(face);
    additive = f.additive;
    const double s = negate ? -1.0 : 1.0;
    Cpx la = eval_leg(f.a, x, v[0], s * ta);
    Cpx lb = eval_leg(f.a, x, v[1], s * tb);
    Cpx lc = eval_leg(f.c, x, v[2], s * tc);
    Cpx ld = eval_leg(f.c, x, v[3], s * td);
    if (f.additive) return la + ld - lb - lc;
    return la * ld / (lb * lc);
}

}  // namespace

double four_leg_residual(Family face, Cpx x, const std::array<Cpx, 4>& v, Cpx al, Cpx be,
                         Cpx ga, bool negate) {
    bool additive = false;
    Cpx value = four_leg_value(face, x, v, be, be - ga, al, al - ga, negate, additive);
    return std::abs(value - (additive ? Cpx(0) : Cpx(1)));
}

Cpx star_four_leg_value(Family face, Cpx x, const std::array<Cpx, 4>& corners, Cpx a1, Cpx a2,
                        Cpx b1, Cpx b2, bool negate) {
    bool additive = false;
    return four_leg_value(face, x, corners, b1 - a2, b2 - a2, b1 - a1, b2 - a1, negate,
                          additive);
}

namespace {

Cpx offset_box(Sampler& smp, double spread = 1.0, double base = 0.0) {
    return Cpx(base + spread * (smp.uniform(0.0, 1.0) - 0.3),
               spread * (smp.uniform(0.0, 1.0) - 0.5));
}

bool well_conditioned(Cpx v) {
    return std::abs(v) >= kGuardDist && std::abs(v * v - 1.0) >= kGuardDist;
}

Cpx quad_at(Family quad, const std::array<Cpx, 4>& v, Cpx al, Cpx be) {
    CpxParams2 pp{al, be};
    return poly::quad_value(quad, v, pp);
}

// Affine solve of a multilinear corner by two-point probing.
Cpx solve_quad_corner(Family quad, std::array<Cpx, 4> v, int idx, Cpx al, Cpx be) {
    v[idx] = Cpx(0);
    Cpx f0 = quad_at(quad, v, al, be);
    v[idx] = Cpx(1);
    Cpx f1 = quad_at(quad, v, al, be);
    Cpx slope = f1 - f0;
    if (std::abs(slope) < 1e-13)
        throw SingularSolve("star corner solve: vanishing leading coefficient");
    return -f0 / slope;
}

Cpx solve_face_corner(Family face, Cpx x, std::array<Cpx, 4> v, int idx, const CpxParams3& pp) {
    v[idx] = Cpx(0);
    Cpx f0 = poly::face_value(face, x, v, pp);
    v[idx] = Cpx(1);
    Cpx f1 = poly::face_value(face, x, v, pp);
    Cpx slope = f1 - f0;
    if (std::abs(slope) < 1e-13)
        throw SingularSolve("face corner solve: vanishing leading coefficient");
    return -f0 / slope;
}

}  // namespace

LegSample sample_quad_solution(Family quad, Sampler& smp) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        Cpx al = offset_box(smp, 0.6, 0.4), be = offset_box(smp, 0.6, -0.4);
        std::array<Cpx, 4> v = {offset_box(smp), offset_box(smp), offset_box(smp), Cpx(0)};
        try {
            v[3] = solve_quad_corner(quad, v, 3, al, be);
        } catch (const SingularSolve&) {
            continue;
        }
        bool ok = true;
        double scale = 1.0;
        for (int i = 0; i < 4 && ok; ++i) {
            if (!well_conditioned(v[i])) ok = false;
            for (int j = i + 1; j < 4; ++j)
                if (std::abs(v[i] - v[j]) < kGuardDist) ok = false;
            scale += std::abs(v[i]);
        }
        if (!ok) continue;
        if (std::abs(quad_at(quad, v, al, be)) > 1e-12 * scale) continue;
        return LegSample{v, al, be, 1e-9};
    }
    throw GuardExhausted("no well-conditioned quad solution found");
}

std::string star_arrangement_name(StarArrangement arr) {
    switch (arr) {
        case StarArrangement::SymmetricQuads: return "symmetric-quads";
        case StarArrangement::AsymmetricQuads: return "asymmetric-quads";
        case StarArrangement::MixedTrapezoidal: return "mixed-trapezoidal";
    }
    throw Error("unreachable star arrangement");
}

StarArrangement star_arrangement_parse(const std::string& s) {
    for (StarArrangement arr :
         {StarArrangement::SymmetricQuads, StarArrangement::AsymmetricQuads,
          StarArrangement::MixedTrapezoidal})
        if (star_arrangement_name(arr) == s) return arr;
    throw UnknownRow("unknown star arrangement: " + s);
}

namespace {

Family mixed_symmetric_partner(Family hquad) {
    switch (hquad) {
        case Family::H3_11: return Family::Q3d1;
        case Family::H3_10: return Family::Q3d0;
        case Family::H3_00: return Family::Q3d0;
        case Family::H2_1: return Family::Q2;
        case Family::H2_0: return Family::Q1d1;
        case Family::H1_1: return Family::Q1d1;
        case Family::H1_0: return Family::Q1d0;
        default: throw UnknownRow("no symmetric partner for " + family_name(hquad));
    }
}

Family star_c_face(Family hquad) {
    switch (hquad) {
        case Family::H3_11: return Family::C3_hh0;
        case Family::H3_10: return Family::C3_100;
        case Family::H3_00: return Family::C3_000;
        case Family::H2_1: return Family::C2_110;
        case Family::H2_0: return Family::C2_100;
        case Family::H1_1: return Family::C1_1;
        case Family::H1_0: return Family::C1_0;
        default: throw UnknownRow("no four-leg face for " + family_name(hquad));
    }
}

struct StarDraw {
    Cpx a1, a2, b1, b2;
    Cpx x, xa, xab, xb, xcv;
};

StarDraw draw_star_seeds(Sampler& smp) {
    StarDraw d;
    d.a1 = offset_box(smp, 0.6, 0.5);
    d.a2 = offset_box(smp, 0.6, -0.5);
    d.b1 = offset_box(smp, 0.6, 0.2);
    d.b2 = offset_box(smp, 0.6, -0.2);
    d.x = offset_box(smp);
    d.xa = offset_box(smp);
    d.xab = offset_box(smp);
    d.xb = offset_box(smp);
    d.xcv = offset_box(smp);
    return d;
}

StarResult star_once(StarArrangement arr, Family family, Sampler& smp) {
    StarDraw d = draw_star_seeds(smp);
    Cpx comp, fl;
    bool add;

    if (arr == StarArrangement::SymmetricQuads) {
        if (family_letter(family) != 'Q')
            throw UnsupportedFamily("symmetric-quads star needs a symmetric quad family");
        Family q = family;
        Cpx xac = solve_quad_corner(q, {d.xa, d.xab, Cpx(0), d.x}, 2, d.b1, d.a2);
        Cpx xbd = solve_quad_corner(q, {d.xab, d.xb, d.x, Cpx(0)}, 3, d.b2, d.a2);
        Cpx xcd = solve_quad_corner(q, {xac, d.x, d.xcv, Cpx(0)}, 3, d.b1, d.a1);
        Cpx xdv = solve_quad_corner(q, {d.x, xbd, xcd, Cpx(0)}, 3, d.b2, d.a1);
        ThreeLeg q1 = three_leg_value(q, 3, {d.xa, d.xab, xac, d.x}, d.b1, d.a2);
        ThreeLeg q2 = three_leg_value(q, 2, {d.xab, d.xb, d.x, xbd}, d.b2, d.a2);
        ThreeLeg q3 = three_leg_value(q, 1, {xac, d.x, d.xcv, xcd}, d.b1, d.a1);
        ThreeLeg q4 = three_leg_value(q, 0, {d.x, xbd, xcd, xdv}, d.b2, d.a1);
        add = q1.additive;
        comp = add ? q1.value + q4.value - q2.value - q3.value
                   : q1.value * q4.value / (q2.value * q3.value);
        fl = star_four_leg_value(quad_legs(q).a, d.x, {d.xa, d.xb, d.xcv, xdv}, d.a1, d.a2,
                                 d.b1, d.b2);
    } else if (arr == StarArrangement::AsymmetricQuads) {
        if (family_letter(family) != 'H')
            throw UnsupportedFamily("asymmetric-quads star needs an asymmetric quad family");
        Family h = family;
        Cpx xac = solve_quad_corner(h, {Cpx(0), d.xa, d.x, d.xab}, 0, d.a2, d.b1);
        Cpx xbd = solve_quad_corner(h, {d.xab, d.xb, d.x, Cpx(0)}, 3, d.b2, d.a2);
        // the lower two quads are trapezoidal rows: plain family, shuffled
        // slots, shifted parameters
        Cpx xcd = solve_quad_corner(h, {d.xcv, d.x, Cpx(0), xac}, 2, d.b1 - d.a1, d.b1);
        Cpx xdv = solve_quad_corner(h, {xbd, xcd, d.x, Cpx(0)}, 3, d.b2 - d.a1, d.b2);
        ThreeLeg q1 = three_leg_value(h, 2, {xac, d.xa, d.x, d.xab}, d.a2, d.b1);
        ThreeLeg q2 = three_leg_value(h, 2, {d.xab, d.xb, d.x, xbd}, d.b2, d.a2);
        ThreeLeg q3 = three_leg_value(h, 1, {d.xcv, d.x, xcd, xac}, d.b1 - d.a1, d.b1);
        ThreeLeg q4 = three_leg_value(h, 2, {xbd, xcd, d.x, xdv}, d.b2 - d.a1, d.b2);
        add = q1.additive;
        comp = add ? q3.value - q1.value - q2.value - q4.value
                   : q3.value / (q1.value * q2.value * q4.value);
        fl = star_four_leg_value(star_c_face(h), d.x, {d.xa, d.xb, d.xcv, xdv}, d.a1, d.a2,
                                 d.b1, d.b2);
    } else {
        if (family_letter(family) != 'H')
            throw UnsupportedFamily("mixed-trapezoidal star needs an asymmetric quad family");
        Family h = family;
        Family q = mixed_symmetric_partner(h);
        Cpx P = d.a1;  // third quad rides the first lattice direction
        Cpx xac = solve_quad_corner(q, {d.xa, d.xab, Cpx(0), d.x}, 2, d.b1, d.a2);
        Cpx xbd = solve_quad_corner(q, {d.xab, d.xb, d.x, Cpx(0)}, 3, d.b2, d.a2);
        Cpx xcd = solve_quad_corner(h, {Cpx(0), xac, d.x, d.xcv}, 0, P - d.b1, P);
        Cpx xdv = solve_quad_corner(h, {Cpx(0), d.x, xbd, xcd}, 0, d.a1 - d.b2, d.a1);
        ThreeLeg q1 = three_leg_value(q, 3, {d.xa, d.xab, xac, d.x}, d.b1, d.a2);
        ThreeLeg q2 = three_leg_value(q, 2, {d.xab, d.xb, d.x, xbd}, d.b2, d.a2);
        ThreeLeg q3 = three_leg_value(h, 2, {xcd, xac, d.x, d.xcv}, P - d.b1, P);
        ThreeLeg q4 = three_leg_value(h, 1, {xdv, d.x, xbd, xcd}, d.a1 - d.b2, d.a1);
        add = q1.additive;
        comp = add ? q4.value - q1.value - q2.value - q3.value
                   : q4.value / (q1.value * q2.value * q3.value);
        fl = star_four_leg_value(star_c_face(h), d.x, {d.xa, d.xb, d.xcv, xdv}, d.a1, d.a2,
                                 d.b1, d.b2, true);
    }

    Cpx target = add ? Cpx(0) : Cpx(1);
    return {std::abs(comp - target), std::abs(fl - target)};
}

}  // namespace

StarResult vertex_star_composition(StarArrangement arr, Family family, Sampler& smp) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        try {
            StarResult r = star_once(arr, family, smp);
            if (std::isfinite(r.composition_residual) && std::isfinite(r.four_leg_residual))
                return r;
        } catch (const SingularSolve&) {
        } catch (const BranchAmbiguity&) {
        }
    }
    throw GuardExhausted("vertex star: no well-conditioned draw found");
}

namespace {

std::string trial_id(const std::string& head, int trial) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "/trial%02d", trial);
    return head + buf;
}

}  // namespace

void three_leg_verify(Family quad, ConsistencyReport& report, const LegOptions& opt) {
    static const char* kCenter[4] = {"a", "b", "c", "d"};
    const std::string head = "three-leg/" + family_name(quad);
    for (int t = 0; t < opt.trials; ++t) {
        Sampler smp = Sampler::for_trial(opt.seed, static_cast<std::uint64_t>(t));
        try {
            std::array<double, 4> res{};
            bool usable = false;
            for (int attempt = 0; attempt < 100 && !usable; ++attempt) {
                LegSample s = sample_quad_solution(quad, smp);
                usable = true;
                for (int center = 0; center < 4 && usable; ++center) {
                    try {
                        res[center] = three_leg_residual(quad, center, s.v, s.al, s.be);
                    } catch (const BranchAmbiguity&) {
                        usable = false;
                    }
                    if (usable && !std::isfinite(res[center])) usable = false;
                }
            }
            if (!usable) throw GuardExhausted("no well-conditioned leg sample found");
            for (int center = 0; center < 4; ++center)
                report.add_numeric(trial_id(head, t) + "/center-" + kCenter[center],
                                   res[center], opt.tol);
        } catch (const Error& e) {
            report.add_failure(trial_id(head, t), e.what());
        }
    }
}

void four_leg_verify(Family face, ConsistencyReport& report, const LegOptions& opt) {
    const std::string head = "four-leg/" + family_name(face);
    for (int t = 0; t < opt.trials; ++t) {
        Sampler smp = Sampler::for_trial(opt.seed, static_cast<std::uint64_t>(t));
        try {
            bool done = false;
            for (int attempt = 0; attempt < 100 && !done; ++attempt) {
                Cpx al = offset_box(smp, 0.5, 0.5), be = offset_box(smp, 0.5, -0.6),
                    ga = offset_box(smp, 0.5, 0.1);
                CpxParams3 pp{al, be, ga};
                Cpx x = offset_box(smp);
                std::array<Cpx, 4> v = {offset_box(smp), offset_box(smp), offset_box(smp),
                                        Cpx(0)};
                try {
                    v[3] = solve_face_corner(face, x, v, 3, pp);
                    if (!well_conditioned(x)) continue;
                    double r = four_leg_residual(face, x, v, al, be, ga);
                    if (!std::isfinite(r)) continue;
                    report.add_numeric(trial_id(head, t), r, opt.tol);
                    done = true;
                } catch (const SingularSolve&) {
                } catch (const BranchAmbiguity&) {
                }
            }
            if (!done) throw GuardExhausted("no well-conditioned face solution found");
        } catch (const Error& e) {
            report.add_failure(trial_id(head, t), e.what());
        }
    }
}

void star_verify(StarArrangement arr, Family family, ConsistencyReport& report,
                 const LegOptions& opt) {
    const std::string head = "star/" + star_arrangement_name(arr) + "/" + family_name(family);
    for (int t = 0; t < opt.trials; ++t) {
        Sampler smp = Sampler::for_trial(opt.seed, static_cast<std::uint64_t>(t));
        try {
            StarResult r = vertex_star_composition(arr, family, smp);
            report.add_numeric(trial_id(head, t) + "/composition", r.composition_residual,
                               opt.tol);
            report.add_numeric(trial_id(head, t) + "/four-leg", r.four_leg_residual, opt.tol);
        } catch (const Error& e) {
            report.add_failure(trial_id(head, t), e.what());
        }
    }
}

void legs_verify(ConsistencyReport& report, const LegOptions& opt) {
    for (Family quad : quad_families()) {
        if (quad == Family::Q4) {
            report.add_exact("three-leg/Q4", true, "elliptic sigma legs excluded: not implemented");
            continue;
        }
        three_leg_verify(quad, report, opt);
    }
    for (Family face : face_families()) {
        if (face == Family::A4) {
            report.add_exact("four-leg/A4", true, "elliptic sigma legs excluded: not implemented");
            continue;
        }
        four_leg_verify(face, report, opt);
    }
    for (Family q : {Family::Q3d1, Family::Q3d0, Family::Q2, Family::Q1d1, Family::Q1d0})
        star_verify(StarArrangement::SymmetricQuads, q, report, opt);
    for (Family h : {Family::H3_11, Family::H3_10, Family::H3_00, Family::H2_1, Family::H2_0,
                     Family::H1_1, Family::H1_0}) {
        star_verify(StarArrangement::AsymmetricQuads, h, report, opt);
        star_verify(StarArrangement::MixedTrapezoidal, h, report, opt);
    }
}

}  // namespace hexlat
