// SPDX-License-Identifier: Apache-2.0
#include "hexlat/hexsys.hpp"

#include <algorithm>
#include <cmath>

#include "hexlat/sampling.hpp"

namespace hexlat {

HexSystem HexSystem::type_a(Family f) {
    if (family_letter(f) != 'A') throw UnsupportedFamily("type_a: " + family_name(f));
    HexSystem s;
    s.variant = HexVariant::TypeA;
    s.a_family = f;
    return s;
}

HexSystem HexSystem::type_c(Family c, Family cbar) {
    if (family_letter(c) != 'C' || family_letter(cbar) != 'C')
        throw UnsupportedFamily("type_c: both families must be second kind");
    HexSystem s;
    s.variant = HexVariant::TypeC;
    s.c_family = c;
    s.cbar_family = cbar;
    return s;
}

Family HexSystem::row_family(int k) const {
    if (variant == HexVariant::TypeA) return a_family;
    return hex_row(variant, k).use_cbar ? cbar_family : c_family;
}

ParamDomain HexSystem::domain() const {
    Family f = variant == HexVariant::TypeA ? a_family : c_family;
    return family_domain(f);
}

std::string HexSystem::name() const {
    if (variant == HexVariant::TypeA) return family_name(a_family);
    return "C[" + family_name(c_family) + "," + family_name(cbar_family) + "]";
}

bool is_legal_c_pair(Family c, Family cbar) {
    static const std::pair<Family, Family> pairs[] = {
        {Family::C3_hh0, Family::C3_h0h}, {Family::C3_100, Family::C3_100},
        {Family::C3_000, Family::C3_000}, {Family::C2_110, Family::C2_101},
        {Family::C2_100, Family::C2_100}, {Family::C2_000, Family::C1_1},
        {Family::C1_0, Family::C1_0},
    };
    for (const auto& [p, q] : pairs)
        if ((c == p && cbar == q) || (c == q && cbar == p)) return true;
    return false;
}

namespace {

// Parameter triples per row, written as combination-space matrices over the
// system parameters (al, be, ga).
constexpr Mat3 kRowParamsGBA = {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};  // (ga, be, al)
constexpr Mat3 kRowParamsGAB = {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};  // (ga, al, be)
constexpr Mat3 kRowParamsABG = kIdentity3;                           // (al, be, ga)
// rows c, f of second-kind systems: (ga - al, -al, be - al)
constexpr Mat3 kRowParamsCSpecial = {{{-1, 0, 1}, {-1, 0, 0}, {-1, 1, 0}}};

const std::array<HexRow, 6> kRowsA = {{
    {{5, 4, 1, 2}, kRowParamsGBA, false},
    {{2, 3, 0, 5}, kRowParamsGAB, false},
    {{3, 4, 1, 0}, kRowParamsABG, false},
    {{2, 1, 4, 5}, kRowParamsGBA, false},
    {{5, 0, 3, 2}, kRowParamsGAB, false},
    {{0, 1, 4, 3}, kRowParamsABG, false},
}};

const std::array<HexRow, 6> kRowsC = {{
    {{5, 4, 1, 2}, kRowParamsGBA, true},
    {{2, 3, 0, 5}, kRowParamsGAB, false},
    {{1, 3, 0, 4}, kRowParamsCSpecial, false},
    {{2, 1, 4, 5}, kRowParamsGBA, false},
    {{5, 0, 3, 2}, kRowParamsGAB, true},
    {{4, 0, 3, 1}, kRowParamsCSpecial, true},
}};

}  // namespace

const HexRow& hex_row(HexVariant variant, int k) {
    return (variant == HexVariant::TypeA ? kRowsA : kRowsC)[static_cast<std::size_t>(k)];
}

RelaxedOrder relaxed_solve_order(int i) {
    int s1 = (i + 3) % 6, s2 = (i + 5) % 6;
    int first = std::min(s1, s2);
    int second = s1 + s2 - first;
    int row1 = (second + 3) % 6;
    int row2 = 0;
    while (row2 == second || hex_missing_slot(row2) == second) ++row2;
    return {first, row1, second, row2};
}

const std::array<HexTransform, 4>& hex_transforms() {
    static const Mat3 swap_ab = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};  // (be, al, ga)
    static const Mat3 cycle = {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};    // (be, ga, al)
    static const std::array<HexTransform, 4> t = {{
        {"long-diagonal-reflection", {4, 3, 2, 1, 0, 5}, swap_ab, true, false},
        {"edge-reflection", {1, 0, 5, 4, 3, 2}, swap_ab, true, true},
        {"rotation-1step", {1, 2, 3, 4, 5, 0}, cycle, false, false},
        {"rotation-3step", {3, 4, 5, 0, 1, 2}, kIdentity3, true, true},
    }};
    return t;
}

// --- verification drivers ----------------------------------------------------

namespace {

struct ExactInputs {
    std::array<Rat, 3> params;
    std::array<Rat, 4> values;
};

ExactInputs sample_exact_inputs(Sampler& smp, ParamDomain domain) {
    ExactInputs in;
    if (domain == ParamDomain::Additive) {
        in.params = smp.sample_until(
            [&] {
                return std::array<Rat, 3>{smp.nonzero_rational(), smp.nonzero_rational(),
                                          smp.nonzero_rational()};
            },
            [](const std::array<Rat, 3>& p) {
                return p[0] != p[1] && p[0] != p[2] && p[1] != p[2] &&
                       p[0] + p[1] - p[2] != 0;
            });
    } else {
        in.params = smp.sample_until(
            [&] {
                return std::array<Rat, 3>{smp.positive_z(), smp.positive_z(), smp.positive_z()};
            },
            [](const std::array<Rat, 3>& p) {
                return p[0] != p[1] && p[0] != p[2] && p[1] != p[2] && p[0] * p[1] != p[2];
            });
    }
    for (auto& v : in.values) v = smp.rational();
    return in;
}

struct CpxInputs {
    std::array<Cpx, 3> params;
    std::array<Cpx, 4> values;
};

CpxInputs sample_cpx_inputs(Sampler& smp) {
    CpxInputs in;
    in.params = smp.sample_until(
        [&] {
            return std::array<Cpx, 3>{smp.complex_box(0.9), smp.complex_box(0.9),
                                      smp.complex_box(0.9)};
        },
        [](const std::array<Cpx, 3>& p) {
            const Cpx &al = p[0], &be = p[1], &ga = p[2];
            for (Cpx w : {al, be, ga, al - be, al - ga, be - ga, al + be - ga, al + be,
                          al - 2.0 * be})
                if (std::abs(w) < 0.25) return false;
            return true;
        });
    for (auto& v : in.values) v = smp.complex_box(1.0);
    return in;
}

template <class PP>
bool rows_all_zero_exact(const HexSystem& sys, const std::array<Rat, 6>& xs, const PP& pp) {
    for (int r = 0; r < 6; ++r)
        if (hex_row_value(sys, r, xs, pp) != 0) return false;
    return true;
}

template <class PP>
double rows_max_rel_residual(const HexSystem& sys, const std::array<Cpx, 6>& xs, const PP& pp) {
    double worst = 0;
    for (int r = 0; r < 6; ++r) {
        auto [v, scale] = hex_row_value_scaled(sys, r, xs, pp);
        double denom = scale;
        if (denom < 1.0) denom = 1.0;
        worst = std::max(worst, std::abs(v) / denom);
    }
    return worst;
}

template <class PP>
void cah_trial_exact(const HexSystem& sys, const PP& pp, const std::array<Rat, 4>& vals,
                     const CahOptions& opt, ConsistencyReport& rep, const std::string& id) {
    auto xs = hex_solve_ivp(sys, 0, vals, pp);
    rep.add_exact(id + "/rows", rows_all_zero_exact(sys, xs, pp));

    if (opt.all_paths) {
        auto paths = hex_solve_all_paths(sys, 0, vals, pp);
        bool agree = paths.size() == 8;
        for (const auto& p : paths)
            if (p != xs) agree = false;
        rep.add_exact(id + "/paths", agree);
    }
    if (opt.relaxed) {
        std::array<Rat, 4> seed = {xs[0], xs[1], xs[2], xs[4]};
        auto ys = hex_solve_relaxed(sys, 0, seed, pp);
        rep.add_exact(id + "/relaxed", ys == xs && rows_all_zero_exact(sys, ys, pp));
    }
}

void cah_trial_elliptic(const HexSystem& sys, const CpxParams3& pp,
                        const std::array<Cpx, 4>& vals, const CahOptions& opt,
                        ConsistencyReport& rep, const std::string& id) {
    auto xs = hex_solve_ivp(sys, 0, vals, pp, 1e-9);
    rep.add_numeric(id + "/rows", rows_max_rel_residual(sys, xs, pp), opt.tol);

    if (opt.all_paths) {
        auto paths = hex_solve_all_paths(sys, 0, vals, pp, 1e-9);
        double worst = 0;
        double mag = 1;
        for (const auto& p : paths)
            for (int s = 0; s < 6; ++s) mag = std::max(mag, std::abs(p[s]));
        for (const auto& p : paths)
            for (int s = 0; s < 6; ++s) worst = std::max(worst, std::abs(p[s] - xs[s]) / mag);
        rep.add_numeric(id + "/paths", worst, opt.tol);
    }
    if (opt.relaxed) {
        std::array<Cpx, 4> seed = {xs[0], xs[1], xs[2], xs[4]};
        auto ys = hex_solve_relaxed(sys, 0, seed, pp, 1e-9);
        double worst = 0;
        for (int s = 0; s < 6; ++s) worst = std::max(worst, std::abs(ys[s] - xs[s]));
        rep.add_numeric(id + "/relaxed", worst / (1 + std::abs(xs[3]) + std::abs(xs[5])),
                        opt.tol);
    }
}

}  // namespace

void cah_verify(const HexSystem& sys, ConsistencyReport& report, const CahOptions& opt,
                const EllipticContext* ctx) {
    ParamDomain dom = sys.domain();
    if (dom == ParamDomain::Elliptic && ctx == nullptr)
        throw EllipticUnavailable("cah_verify: elliptic system needs a context");

    for (int t = 0; t < opt.trials; ++t) {
        std::string id = "cah/" + sys.name() + "/t" + std::to_string(t);
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            Sampler smp = Sampler::for_trial(opt.seed, static_cast<std::uint64_t>(t) * 101 +
                                                           static_cast<std::uint64_t>(attempt));
            try {
                if (dom == ParamDomain::Additive) {
                    auto in = sample_exact_inputs(smp, dom);
                    RatAdd3 pp{in.params[0], in.params[1], in.params[2]};
                    cah_trial_exact(sys, pp, in.values, opt, report, id);
                } else if (dom == ParamDomain::Hyperbolic) {
                    auto in = sample_exact_inputs(smp, dom);
                    RatHyp3 pp{in.params[0], in.params[1], in.params[2]};
                    cah_trial_exact(sys, pp, in.values, opt, report, id);
                } else {
                    auto in = sample_cpx_inputs(smp);
                    CpxParams3 pp{in.params[0], in.params[1], in.params[2], ctx};
                    cah_trial_elliptic(sys, pp, in.values, opt, report, id);
                }
                done = true;
            } catch (const SingularSolve&) {
                // resample this trial
            }
        }
        if (!done) report.add_failure(id, "resample budget exhausted on singular solves");
    }
}

void hex_symmetry_check(const HexSystem& sys, ConsistencyReport& report,
                        const HexSymmetryOptions& opt, const EllipticContext* ctx) {
    ParamDomain dom = sys.domain();
    if (dom == ParamDomain::Elliptic && ctx == nullptr)
        throw EllipticUnavailable("hex_symmetry_check: elliptic system needs a context");

    HexSystem swapped = sys;
    if (sys.variant == HexVariant::TypeC)
        swapped = HexSystem::type_c(sys.cbar_family, sys.c_family);

    for (int t = 0; t < opt.trials; ++t) {
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            Sampler smp = Sampler::for_trial(opt.seed, static_cast<std::uint64_t>(t) * 101 +
                                                           static_cast<std::uint64_t>(attempt));
            try {
                if (dom == ParamDomain::Elliptic) {
                    auto in = sample_cpx_inputs(smp);
                    CpxParams3 pp{in.params[0], in.params[1], in.params[2], ctx};
                    auto xs = hex_solve_ivp(sys, 0, in.values, pp, 1e-9);
                    for (const auto& tr : hex_transforms()) {
                        std::string id = "hexsym/" + sys.name() + "/" + tr.name + "/t" +
                                         std::to_string(t);
                        std::array<Cpx, 6> txs;
                        for (int s = 0; s < 6; ++s) txs[s] = xs[tr.perm[s]];
                        auto mp = map_params(pp, tr.params);
                        report.add_numeric(id, rows_max_rel_residual(sys, txs, mp), opt.tol);
                    }
                } else {
                    auto in = sample_exact_inputs(smp, dom);
                    std::array<Rat, 6> xs;
                    if (dom == ParamDomain::Additive) {
                        RatAdd3 pp{in.params[0], in.params[1], in.params[2]};
                        xs = hex_solve_ivp(sys, 0, in.values, pp);
                        for (const auto& tr : hex_transforms()) {
                            std::string id = "hexsym/" + sys.name() + "/" + tr.name + "/t" +
                                             std::to_string(t);
                            std::array<Rat, 6> txs;
                            for (int s = 0; s < 6; ++s) txs[s] = xs[tr.perm[s]];
                            auto mp = map_params(pp, tr.params);
                            const HexSystem& target =
                                (sys.variant == HexVariant::TypeC && tr.swaps_c_pair) ? swapped
                                                                                      : sys;
                            bool zero = rows_all_zero_exact(target, txs, mp);
                            bool expect_zero =
                                sys.variant == HexVariant::TypeA || tr.valid_for_c;
                            report.add_exact(id, zero == expect_zero,
                                             expect_zero ? "" : "designated non-symmetry");
                        }
                    } else {
                        RatHyp3 pp{in.params[0], in.params[1], in.params[2]};
                        xs = hex_solve_ivp(sys, 0, in.values, pp);
                        for (const auto& tr : hex_transforms()) {
                            std::string id = "hexsym/" + sys.name() + "/" + tr.name + "/t" +
                                             std::to_string(t);
                            std::array<Rat, 6> txs;
                            for (int s = 0; s < 6; ++s) txs[s] = xs[tr.perm[s]];
                            auto mp = map_params(pp, tr.params);
                            const HexSystem& target =
                                (sys.variant == HexVariant::TypeC && tr.swaps_c_pair) ? swapped
                                                                                      : sys;
                            bool zero = rows_all_zero_exact(target, txs, mp);
                            bool expect_zero =
                                sys.variant == HexVariant::TypeA || tr.valid_for_c;
                            report.add_exact(id, zero == expect_zero,
                                             expect_zero ? "" : "designated non-symmetry");
                        }
                    }
                }
                done = true;
            } catch (const SingularSolve&) {
            }
        }
        if (!done)
            report.add_failure("hexsym/" + sys.name() + "/t" + std::to_string(t),
                               "resample budget exhausted");
    }
}

}  // namespace hexlat
