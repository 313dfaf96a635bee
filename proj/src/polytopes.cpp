// SPDX-License-Identifier: Apache-2.0
#include "hexlat/polytopes.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "hexlat/catalog.hpp"
#include "hexlat/hexsys.hpp"
#include "hexlat/params.hpp"
#include "hexlat/sampling.hpp"
#include "hexlat/scalar.hpp"

namespace hexlat {

namespace {

ComboRow type_c_row(Family c, Family cbar, Family h, bool swap_h, Family q, Family qs) {
    ComboRow row;
    row.c = {c};
    row.cbar = {cbar};
    row.h = {h, swap_h};
    row.q = {q};
    row.qstar = {qs};
    return row;
}

ComboRow type_a_row(Family a, Family q) {
    ComboRow row;
    row.type_a = true;
    row.a_family = a;
    row.a_quad = q;
    return row;
}

}  // namespace

bool ComboRow::hyperbolic() const {
    return family_domain(type_a ? a_family : c.family) == ParamDomain::Hyperbolic;
}

std::string ComboRow::name() const { return family_name(type_a ? a_family : c.family); }

const std::vector<ComboRow>& combo_table() {
    static const std::vector<ComboRow> rows = {
        type_c_row(Family::C3_hh0, Family::C3_h0h, Family::H3_11, false, Family::Q3d1,
                   Family::Q3d0),
        type_c_row(Family::C3_h0h, Family::C3_hh0, Family::H3_11, true, Family::Q3d0,
                   Family::Q3d1),
        type_c_row(Family::C3_100, Family::C3_100, Family::H3_10, false, Family::Q3d0,
                   Family::Q3d0),
        type_c_row(Family::C3_000, Family::C3_000, Family::H3_00, false, Family::Q3d0,
                   Family::Q3d0),
        type_c_row(Family::C2_110, Family::C2_101, Family::H2_1, false, Family::Q2,
                   Family::Q1d1),
        type_c_row(Family::C2_101, Family::C2_110, Family::H2_1, true, Family::Q1d1,
                   Family::Q2),
        type_c_row(Family::C2_100, Family::C2_100, Family::H2_0, false, Family::Q1d1,
                   Family::Q1d1),
        type_c_row(Family::C1_1, Family::C2_000, Family::H1_1, false, Family::Q1d1,
                   Family::Q1d0),
        type_c_row(Family::C2_000, Family::C1_1, Family::H1_1, true, Family::Q1d0,
                   Family::Q1d1),
        type_c_row(Family::C1_0, Family::C1_0, Family::H1_0, false, Family::Q1d0,
                   Family::Q1d0),
        type_a_row(Family::A3d1, Family::Q3d1),
        type_a_row(Family::A3d0, Family::Q3d0),
        type_a_row(Family::A2_11, Family::Q2),
        type_a_row(Family::A2_10, Family::Q1d1),
        type_a_row(Family::A2_00, Family::Q1d0),
    };
    return rows;
}

const ComboRow& combo_row(std::size_t index) {
    const auto& rows = combo_table();
    if (index >= rows.size())
        throw UnknownRow("combination row index out of range: " + std::to_string(index));
    return rows[index];
}

const ComboRow& combo_row(const std::string& name) {
    for (const ComboRow& row : combo_table())
        if (row.name() == name) return row;
    throw UnknownRow("no combination row named " + name);
}

std::string polytope_shape_name(PolytopeShape shape) {
    switch (shape) {
        case PolytopeShape::CAHP1: return "CAHP1";
        case PolytopeShape::CAHP2: return "CAHP2";
        case PolytopeShape::CAED1: return "CAED1";
        case PolytopeShape::CAED2: return "CAED2";
        case PolytopeShape::CATO: return "CATO";
        case PolytopeShape::PrismA: return "CAHP-A";
        case PolytopeShape::CA66D: return "CA66D";
    }
    throw Error("unreachable polytope shape");
}

PolytopeShape polytope_shape_parse(const std::string& name) {
    static const std::map<std::string, PolytopeShape> lut = {
        {"CAHP1", PolytopeShape::CAHP1},  {"CAHP2", PolytopeShape::CAHP2},
        {"CAED1", PolytopeShape::CAED1},  {"CAED2", PolytopeShape::CAED2},
        {"CATO", PolytopeShape::CATO},    {"CAHP-A", PolytopeShape::PrismA},
        {"CA66D", PolytopeShape::CA66D},
    };
    auto it = lut.find(name);
    if (it == lut.end()) throw Error("unknown polytope shape: " + name);
    return it->second;
}

std::array<PrismSystem::QuadRow, 6> PrismSystem::quad_rows() const {
    const std::string& al = hex_params[0];
    const std::string& be = hex_params[1];
    const std::string& ga = hex_params[2];
    return {{
        {{y[0], y[1], x[0], x[1]}, ga, vertical},
        {{y[1], y[2], x[1], x[2]}, al, vertical},
        {{y[2], y[3], x[2], x[3]}, be, vertical},
        {{y[4], y[3], x[4], x[3]}, ga, vertical},
        {{y[5], y[4], x[5], x[4]}, al, vertical},
        {{y[0], y[5], x[0], x[5]}, be, vertical},
    }};
}

namespace {

// Scenario step lists.  Vertex names pair a hexagon letter (x, y, z, w for
// stacked hexagons; u, v for the remaining cube directions) with the cyclic
// position a..f.  `solve hex` determines the two adjacent missing vertices
// of a hexagonal face; quad steps bind (corner names : parameter names) and
// solve for the corner after the arrow.  Everything after a solve is
// exact-rational arithmetic, so `check` lines must come out identically zero.
constexpr const char* kScenarioText = R"(
scenario CAHP1
params al be ga rho
init xa xb xe xf ya
solve hex xa xb xc xd xe xf : al be ga
solve Hu xa ya xb yb : rho ga -> yb
solve Qs ya yf xa xf : be rho -> yf
solve Q yb yc xb xc : al rho -> yc
solve Qs yf ye xf xe : al rho -> ye
solve Q yc yd xc xd : be rho -> yd
check hex ya yb yc yd ye yf : al be ga
check Hu xe ye xd yd : rho ga

scenario CAHP2
params al be ga rho
init xa xb xe xf ya
solve hex xa xb xc xd xe xf : al be ga
solve H yb ya xb xa : ga rho -> yb
solve Hu xf xa yf ya : be rho -> yf
solve Hu yb yc xb xc : al rho -> yc
solve Hu xe xf ye yf : al rho -> ye
solve Hu yc yd xc xd : be rho -> yd
check hex yd ye yf ya yb yc : al be ga
check H yd ye xd xe : ga rho

scenario CAED1
params al be ga rho rhob
init xa xb xc xf za zb
solve hex xa xb xc xd xe xf : al be ga
solve hex ya yb zb xb xa za : rho rhob ga
solve Q zb zc xb xc : al rhob -> zc
solve Qs za zf xa xf : be rho -> zf
solve Q zc zd xc xd : be rhob -> zd
solve Qs zf ze xf xe : al rho -> ze
solve Q yb yc zb zc : al rho -> yc
solve Qs ya yf za zf : be rhob -> yf
solve hex ya yb yc yd ye yf : al be ga
check hex ya yb yc yd ye yf : al be ga
check hex ye yd zd xd xe ze : rho rhob ga
check Q yc yd zc zd : be rho
check Qs yf ye zf ze : al rhob

scenario CAED2
params al be ga rho rhob
init xa xb xc xd zb zc
solve hex xa xb xc xd xe xf : al be ga
solve hex yc zc xc xb zb yb : rhob al rho
solve Q zc zd xc xd : be rhob -> zd
solve H zb za xb xa : ga rho -> za
solve Hu ze xe zd xd : rhob ga -> ze
solve Hu xf xa zf za : be rho -> zf
solve Hu yc yd zc zd : be rho -> yd
solve Hu zb yb za ya : rhob ga -> ya
solve hex yd ye yf ya yb yc : al be ga
check hex yd ye yf ya yb yc : al be ga
check hex xf zf yf ye ze xe : rhob al rho
check H yd ye zd ze : ga rho
check Q ya yf za zf : be rhob

scenario CATO
params al be ga rho rhob rhoh
init xa xb xe xf za zd zf
solve hex xa xb xc xd xe xf : al be ga
solve hex xa za wa wf zf xf : rhob be rho
solve H zb za xb xa : ga rho -> zb
solve Qs zf ze xf xe : al rhob -> ze
solve hex we wd zd xd xe ze : rhob rhoh ga
solve Q zc zd xc xd : be rhoh -> zc
solve hex zf wf yf ye we ze : rhoh al rho
solve hex wc zc xc xb zb wb : rhoh al rho
solve hex zb za wa ya yb wb : rhob rhoh ga
solve hex yd wd zd zc wc yc : rhob be rho
check hex yd ye yf ya yb yc : al be ga
check H yd ye wd we : ga rho
check Qs yb yc wb wc : al rhob
check Q ya yf wa wf : be rhoh

scenario CAHP-A
params al be ga rho
init xa xb xe xf ya
solve hex xa xb xc xd xe xf : al be ga
solve Q ya yb xa xb : ga rho -> yb
solve Q ya yf xa xf : be rho -> yf
solve Q yb yc xb xc : al rho -> yc
solve Q yf ye xf xe : al rho -> ye
solve Q yc yd xc xd : be rho -> yd
check Q ye yd xe xd : ga rho
check hex ya yb yc yd ye yf : al be ga
)";

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

ScenarioQuad quad_kind_parse(const std::string& s, const std::string& line) {
    if (s == "Q") return ScenarioQuad::Q;
    if (s == "Qs") return ScenarioQuad::Qstar;
    if (s == "H") return ScenarioQuad::H;
    if (s == "Hu") return ScenarioQuad::Hu;
    throw Error("unknown quad slot '" + s + "' in scenario step: " + line);
}

ScenarioStep parse_step(const std::vector<std::string>& toks, const std::string& line) {
    ScenarioStep st;
    st.check = toks[0] == "check";
    std::size_t i = 1;
    if (i >= toks.size()) throw Error("empty scenario step: " + line);
    st.hex = toks[i] == "hex";
    if (!st.hex) st.quad = quad_kind_parse(toks[i], line);
    ++i;
    while (i < toks.size() && toks[i] != ":") st.names.push_back(toks[i++]);
    if (i == toks.size()) throw Error("scenario step without parameters: " + line);
    ++i;
    while (i < toks.size() && toks[i] != "->") st.params.push_back(toks[i++]);
    if (i < toks.size()) {
        if (st.check || st.hex) throw Error("unexpected solve target: " + line);
        if (i + 2 != toks.size()) throw Error("malformed solve target: " + line);
        st.unknown = toks[i + 1];
    } else if (!st.check && !st.hex) {
        throw Error("quad solve step without a target: " + line);
    }
    std::size_t want_names = st.hex ? 6 : 4;
    std::size_t want_params = st.hex ? 3 : 2;
    if (st.names.size() != want_names || st.params.size() != want_params)
        throw Error("wrong name or parameter count in scenario step: " + line);
    if (!st.unknown.empty() &&
        std::find(st.names.begin(), st.names.end(), st.unknown) == st.names.end())
        throw Error("solve target is not a bound corner: " + line);
    std::string text;
    for (const std::string& t : toks) {
        if (!text.empty()) text += ' ';
        text += t;
    }
    st.text = std::move(text);
    return st;
}

// Replays the step list against the initial known set: solves determine
// exactly the still-missing names, checks read only known names, and the
// final known set covers every name mentioned anywhere.
void audit_scenario(const PolytopeScenario& sc) {
    const std::string where = polytope_shape_name(sc.shape);
    std::set<std::string> declared(sc.params.begin(), sc.params.end());
    std::set<std::string> known(sc.initial.begin(), sc.initial.end());
    std::set<std::string> mentioned = known;
    for (const ScenarioStep& st : sc.steps)
        mentioned.insert(st.names.begin(), st.names.end());

    for (const ScenarioStep& st : sc.steps) {
        for (const std::string& p : st.params)
            if (!declared.count(p))
                throw Error(where + ": undeclared parameter " + p + " in: " + st.text);
        if (st.check) {
            for (const std::string& n : st.names)
                if (!known.count(n))
                    throw Error(where + ": check reads undetermined vertex " + n + ": " + st.text);
            continue;
        }
        if (st.hex) {
            std::vector<int> unk;
            for (int i = 0; i < 6; ++i)
                if (!known.count(st.names[i])) unk.push_back(i);
            if (unk.size() != 2)
                throw Error(where + ": hex solve must determine two vertices: " + st.text);
            if ((unk[1] - unk[0]) % 6 != 1 && (unk[0] - unk[1] + 6) % 6 != 1)
                throw Error(where + ": hex solve unknowns are not adjacent: " + st.text);
            known.insert(st.names[unk[0]]);
            known.insert(st.names[unk[1]]);
            continue;
        }
        for (const std::string& n : st.names) {
            if (n == st.unknown) continue;
            if (!known.count(n))
                throw Error(where + ": solve reads undetermined vertex " + n + ": " + st.text);
        }
        if (known.count(st.unknown))
            throw Error(where + ": vertex " + st.unknown + " solved twice: " + st.text);
        known.insert(st.unknown);
    }
    if (known != mentioned) throw Error(where + ": scenario leaves vertices undetermined");
}

std::array<std::string, 6> hexagon(char prefix) {
    std::array<std::string, 6> out;
    for (int i = 0; i < 6; ++i) out[i] = std::string{prefix, static_cast<char>('a' + i)};
    return out;
}

// The hexagonal face through one cyclic position of all six stacked
// hexagons, in the orientation the second family of prisms uses.
std::array<std::string, 6> cross_hexagon(char pos) {
    std::array<std::string, 6> out;
    const char prefixes[6] = {'y', 'x', 'u', 'v', 'w', 'z'};
    for (int i = 0; i < 6; ++i) out[i] = std::string{prefixes[i], pos};
    return out;
}

std::map<PolytopeShape, PolytopeScenario> build_scenarios() {
    std::map<PolytopeShape, PolytopeScenario> out;
    PolytopeScenario* cur = nullptr;
    std::istringstream in(kScenarioText);
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "scenario") {
            if (toks.size() != 2) throw Error("malformed scenario header: " + line);
            PolytopeShape sh = polytope_shape_parse(toks[1]);
            cur = &out[sh];
            cur->shape = sh;
            continue;
        }
        if (!cur) throw Error("scenario directive before any header: " + line);
        if (toks[0] == "params")
            cur->params.assign(toks.begin() + 1, toks.end());
        else if (toks[0] == "init")
            cur->initial.assign(toks.begin() + 1, toks.end());
        else if (toks[0] == "solve" || toks[0] == "check")
            cur->steps.push_back(parse_step(toks, line));
        else
            throw Error("unknown scenario directive: " + line);
    }
    for (const auto& [shape, sc] : out) {
        (void)shape;
        audit_scenario(sc);
    }

    // Six stacked hexagons closed into a torus-like arrangement; executed
    // through prism bundles rather than a flat step list.
    PolytopeScenario ca;
    ca.shape = PolytopeShape::CA66D;
    ca.params = {"al", "be", "ga", "rho", "rhob", "rhoh"};
    ca.initial = {"xa", "xb", "xe", "xf", "ya", "za", "wa"};
    out[PolytopeShape::CA66D] = std::move(ca);
    return out;
}

// One sampled trial: parameter values, vertex values, and the equation
// evaluations of the combination row under test.
struct TrialCtx {
    const ComboRow& combo;
    bool hyper;
    HexSystem sys;
    std::map<std::string, Rat> par;
    std::map<std::string, Rat> vals;

    TrialCtx(const ComboRow& row, const std::vector<std::string>& pnames,
             const std::vector<std::string>& init, Sampler& smp)
        : combo(row),
          hyper(row.hyperbolic()),
          sys(row.type_a ? HexSystem::type_a(row.a_family)
                         : HexSystem::type_c(row.c.family, row.cbar.family)) {
        std::set<Rat> used;
        for (const std::string& p : pnames) {
            Rat v = smp.sample_until([&] { return hyper ? smp.positive_z() : smp.rational(); },
                                     [&](const Rat& r) { return r != 0 && !used.count(r); });
            used.insert(v);
            par[p] = v;
        }
        for (const std::string& n : init) vals[n] = smp.rational();
    }

    const Rat& pval(const std::string& name) const {
        auto it = par.find(name);
        if (it == par.end()) throw Error("unknown scenario parameter " + name);
        return it->second;
    }

    const Rat& vval(const std::string& name) const {
        auto it = vals.find(name);
        if (it == vals.end()) throw Error("undetermined scenario vertex " + name);
        return it->second;
    }

    EquationSpec quad_spec(ScenarioQuad kind) const {
        if (combo.type_a) {
            if (kind != ScenarioQuad::Q)
                throw IllegalCombo("type-A rows carry a single quad family");
            return {combo.a_quad};
        }
        switch (kind) {
            case ScenarioQuad::Q: return combo.q;
            case ScenarioQuad::Qstar: return combo.qstar;
            case ScenarioQuad::H:
            case ScenarioQuad::Hu: return combo.h;
        }
        throw Error("unreachable quad slot");
    }

    Rat quad_eval(ScenarioQuad kind, std::array<Rat, 4> args, Rat pa, Rat pb) const {
        if (kind == ScenarioQuad::Hu) {
            // Upper position of the asymmetric quad: corners reread as
            // (a, d, c, b) and the first parameter offset against the second.
            args = {args[0], args[3], args[2], args[1]};
            pa = hyper ? pb / pa : pb - pa;
            kind = ScenarioQuad::H;
        }
        EquationSpec spec = quad_spec(kind);
        if (hyper) return eval_quad(spec, args, RatHyp2(pa, pb));
        return eval_quad(spec, args, RatAdd2{std::move(pa), std::move(pb)});
    }

    Rat quad_value(ScenarioQuad kind, const std::array<std::string, 4>& names,
                   const std::string& pa, const std::string& pb) const {
        std::array<Rat, 4> args;
        for (int i = 0; i < 4; ++i) args[i] = vval(names[i]);
        return quad_eval(kind, args, pval(pa), pval(pb));
    }

    void quad_solve(ScenarioQuad kind, const std::array<std::string, 4>& names,
                    const std::string& pa, const std::string& pb, const std::string& unknown,
                    const std::string& what) {
        std::array<Rat, 4> args{};
        int pos = -1;
        for (int i = 0; i < 4; ++i) {
            if (pos < 0 && names[i] == unknown) {
                pos = i;
                continue;
            }
            args[i] = vval(names[i]);
        }
        if (pos < 0) throw Error("solve target is not a bound corner: " + what);
        const Rat& a = pval(pa);
        const Rat& b = pval(pb);
        args[pos] = Rat(0);
        Rat f0 = quad_eval(kind, args, a, b);
        args[pos] = Rat(1);
        Rat lead = quad_eval(kind, args, a, b) - f0;
        if (lead == 0) throw SingularSolve("zero leading coefficient in " + what);
        vals[unknown] = -f0 / lead;
    }

    template <class PP>
    void solve_adjacent_pair(std::array<Rat, 6>& xs, int u, const PP& pp) const {
        xs[u] = hex_solve_slot(sys, (u + 4) % 6, u, xs, pp);
        xs[(u + 1) % 6] = hex_solve_slot(sys, (u + 3) % 6, (u + 1) % 6, xs, pp);
    }

    // Completes a hexagonal face with up to two adjacent vertices missing;
    // a fully known face is left untouched.
    void hex_solve_two(const std::array<std::string, 6>& names,
                       const std::array<std::string, 3>& pnames, const std::string& what) {
        std::array<Rat, 6> xs{};
        std::vector<int> unk;
        for (int i = 0; i < 6; ++i) {
            auto it = vals.find(names[i]);
            if (it == vals.end())
                unk.push_back(i);
            else
                xs[i] = it->second;
        }
        if (unk.empty()) return;
        int u;
        if (unk.size() == 2 && (unk[1] - unk[0]) % 6 == 1)
            u = unk[0];
        else if (unk.size() == 2 && (unk[0] - unk[1] + 6) % 6 == 1)
            u = unk[1];
        else
            throw Error("hex solve needs two adjacent unknowns: " + what);
        const Rat& p0 = pval(pnames[0]);
        const Rat& p1 = pval(pnames[1]);
        const Rat& p2 = pval(pnames[2]);
        try {
            if (hyper)
                solve_adjacent_pair(xs, u, RatHyp3(p0, p1, p2));
            else
                solve_adjacent_pair(xs, u, RatAdd3{p0, p1, p2});
        } catch (const SingularSolve&) {
            throw SingularSolve("singular hex solve: " + what);
        }
        vals[names[u]] = xs[u];
        vals[names[(u + 1) % 6]] = xs[(u + 1) % 6];
    }

    std::array<Rat, 6> hex_rows(const std::array<std::string, 6>& names,
                                const std::array<std::string, 3>& pnames) const {
        std::array<Rat, 6> xs;
        for (int i = 0; i < 6; ++i) xs[i] = vval(names[i]);
        const Rat& p0 = pval(pnames[0]);
        const Rat& p1 = pval(pnames[1]);
        const Rat& p2 = pval(pnames[2]);
        std::array<Rat, 6> out;
        if (hyper) {
            RatHyp3 pp(p0, p1, p2);
            for (int k = 0; k < 6; ++k) out[k] = hex_row_value(sys, k, xs, pp);
        } else {
            RatAdd3 pp{p0, p1, p2};
            for (int k = 0; k < 6; ++k) out[k] = hex_row_value(sys, k, xs, pp);
        }
        return out;
    }
};

template <std::size_t N>
std::array<std::string, N> as_array(const std::vector<std::string>& v) {
    std::array<std::string, N> out;
    std::copy_n(v.begin(), N, out.begin());
    return out;
}

std::string trial_tag(int trial) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "trial%02d", trial);
    return buf;
}

std::string step_tag(const std::string& trial, std::size_t step) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "/step%02zu", step);
    return trial + buf;
}

void run_steps(const PolytopeScenario& sc, TrialCtx& ctx, const std::string& ttag,
               ConsistencyReport& rep) {
    for (std::size_t i = 0; i < sc.steps.size(); ++i) {
        const ScenarioStep& st = sc.steps[i];
        if (!st.check) {
            if (st.hex)
                ctx.hex_solve_two(as_array<6>(st.names), as_array<3>(st.params), st.text);
            else
                ctx.quad_solve(st.quad, as_array<4>(st.names), st.params[0], st.params[1],
                               st.unknown, st.text);
            continue;
        }
        std::string tag = step_tag(ttag, i);
        if (st.hex) {
            auto rows = ctx.hex_rows(as_array<6>(st.names), as_array<3>(st.params));
            for (int k = 0; k < 6; ++k)
                rep.add_exact(tag + "/row" + std::to_string(k), rows[k] == 0, st.text);
        } else {
            rep.add_exact(tag, ctx.quad_value(st.quad, as_array<4>(st.names), st.params[0],
                                              st.params[1]) == 0,
                          st.text);
        }
    }
}

// Solves the top hexagon of one prism bundle from its bottom hexagon plus
// one top vertex, then records the leftover quad and the six top hex rows.
void prism_solve(TrialCtx& ctx, const PrismSystem& pr, const std::string& tag,
                 ConsistencyReport& rep) {
    ctx.hex_solve_two(pr.x, pr.hex_params, tag + "/hex-bottom");
    auto q = pr.quad_rows();
    constexpr std::pair<int, int> kOrder[5] = {{0, 1}, {5, 5}, {1, 2}, {4, 4}, {2, 3}};
    for (auto [qi, ys] : kOrder)
        ctx.quad_solve(ScenarioQuad::Q, q[qi].corners, q[qi].pa, q[qi].pb, pr.y[ys],
                       tag + "/quad" + std::to_string(qi));
    rep.add_exact(tag + "/quad3",
                  ctx.quad_value(ScenarioQuad::Q, q[3].corners, q[3].pa, q[3].pb) == 0,
                  "leftover prism quad");
    auto rows = ctx.hex_rows(pr.y, pr.hex_params);
    for (int k = 0; k < 6; ++k)
        rep.add_exact(tag + "/hex-top/row" + std::to_string(k), rows[k] == 0,
                      "prism top hexagon");
}

// Six stacked hexagons wrapped around: three vertical prisms propagate the
// stack, then the six cross prisms (hexagonal faces through one position of
// every layer) close it up, with the original hex parameters reappearing as
// the cross prisms' vertical parameters.
void run_ca66d(TrialCtx& ctx, const std::string& ttag, ConsistencyReport& rep) {
    const std::array<std::string, 3> hexp = {"al", "be", "ga"};
    const std::array<std::string, 3> cross = {"rhoh", "rhob", "rho"};
    prism_solve(ctx, {hexagon('x'), hexagon('y'), hexp, "rho"}, ttag + "/stack-xy", rep);
    prism_solve(ctx, {hexagon('y'), hexagon('z'), hexp, "rhob"}, ttag + "/stack-yz", rep);
    prism_solve(ctx, {hexagon('z'), hexagon('w'), hexp, "rhoh"}, ttag + "/stack-zw", rep);

    const struct {
        char i, j;
        const char* vertical;
    } kRings[5] = {{'a', 'f', "be"}, {'f', 'e', "al"}, {'e', 'd', "ga"},
                   {'d', 'c', "be"}, {'c', 'b', "al"}};
    for (const auto& ring : kRings) {
        std::string tag = ttag + "/ring-" + ring.i + ring.j;
        ctx.hex_solve_two(cross_hexagon(ring.i), cross, tag + "/hex-" + ring.i);
        ctx.hex_solve_two(cross_hexagon(ring.j), cross, tag + "/hex-" + ring.j);
        PrismSystem pr{cross_hexagon(ring.i), cross_hexagon(ring.j), cross, ring.vertical};
        auto q = pr.quad_rows();
        for (int k = 0; k < 6; ++k)
            rep.add_exact(tag + "/quad" + std::to_string(k),
                          ctx.quad_value(ScenarioQuad::Q, q[k].corners, q[k].pa, q[k].pb) == 0,
                          "cross prism quad");
    }

    PrismSystem cap{cross_hexagon('b'), cross_hexagon('a'), cross, "ga"};
    auto q = cap.quad_rows();
    for (int k : {1, 2, 3})
        rep.add_exact(ttag + "/cap/quad" + std::to_string(k),
                      ctx.quad_value(ScenarioQuad::Q, q[k].corners, q[k].pa, q[k].pb) == 0,
                      "closing prism quad");
    auto vrows = ctx.hex_rows(hexagon('v'), hexp);
    auto urows = ctx.hex_rows(hexagon('u'), hexp);
    for (int k = 0; k < 6; ++k) {
        rep.add_exact(ttag + "/hex-v/row" + std::to_string(k), vrows[k] == 0,
                      "never-solved stacked hexagon");
        rep.add_exact(ttag + "/hex-u/row" + std::to_string(k), urows[k] == 0,
                      "never-solved stacked hexagon");
    }
}

}  // namespace

const PolytopeScenario& polytope_scenario(PolytopeShape shape) {
    static const std::map<PolytopeShape, PolytopeScenario> all = build_scenarios();
    auto it = all.find(shape);
    if (it == all.end()) throw Error("no scenario data for " + polytope_shape_name(shape));
    return it->second;
}

ConsistencyReport run_polytope(PolytopeShape shape, const ComboRow& combo,
                               const PolytopeOptions& opt) {
    bool needs_type_a = shape == PolytopeShape::PrismA || shape == PolytopeShape::CA66D;
    if (combo.type_a != needs_type_a)
        throw IllegalCombo(polytope_shape_name(shape) + " does not admit row " + combo.name());
    if (!combo.type_a && !is_legal_c_pair(combo.c.family, combo.cbar.family))
        throw IllegalCombo("hex pair (" + family_name(combo.c.family) + ", " +
                           family_name(combo.cbar.family) + ") does not close up");
    if (family_domain(combo.type_a ? combo.a_family : combo.c.family) == ParamDomain::Elliptic)
        throw EllipticUnavailable("polytope scenarios run in exact domains only");

    const PolytopeScenario& sc = polytope_scenario(shape);
    ConsistencyReport report;
    for (int t = 0; t < opt.trials; ++t) {
        Sampler smp = Sampler::for_trial(opt.seed, static_cast<std::uint64_t>(t));
        std::string ttag = trial_tag(t);
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            TrialCtx ctx(combo, sc.params, sc.initial, smp);
            ConsistencyReport local;
            try {
                if (shape == PolytopeShape::CA66D)
                    run_ca66d(ctx, ttag, local);
                else
                    run_steps(sc, ctx, ttag, local);
            } catch (const SingularSolve&) {
                continue;  // degenerate draw, resample
            }
            report.merge(local);
            done = true;
        }
        if (!done) report.add_failure(ttag, "resample budget exhausted on singular draws");
    }
    return report;
}

void polytopes_verify(ConsistencyReport& report, const PolytopeOptions& opt) {
    constexpr PolytopeShape kTableShapes[5] = {PolytopeShape::CAHP1, PolytopeShape::CAHP2,
                                               PolytopeShape::CAED1, PolytopeShape::CAED2,
                                               PolytopeShape::CATO};
    auto summarize = [&](PolytopeShape shape, const ComboRow& row, const PolytopeOptions& o) {
        ConsistencyReport sub = run_polytope(shape, row, o);
        report.add_exact(polytope_shape_name(shape) + "/" + row.name(), sub.failed() == 0,
                         std::to_string(sub.total() - sub.failed()) + "/" +
                             std::to_string(sub.total()) + " checks zero");
    };
    for (const ComboRow& row : combo_table()) {
        if (row.type_a) {
            summarize(PolytopeShape::PrismA, row, opt);
            PolytopeOptions deep = opt;
            deep.trials = std::max(1, opt.trials / 5);
            summarize(PolytopeShape::CA66D, row, deep);
        } else {
            for (PolytopeShape shape : kTableShapes) summarize(shape, row, opt);
        }
    }
}

}  // namespace hexlat
