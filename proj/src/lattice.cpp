// SPDX-License-Identifier: Apache-2.0

#include "hexlat/lattice.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

namespace hexlat {

std::vector<GridFace> lattice_faces(int rows, int cols) {
    std::vector<GridFace> out;
    for (int r = 0; r + 1 <= rows - 1; ++r)
        for (int c0 = 0; c0 + 2 <= cols - 1; ++c0)
            if ((r + c0) % 2 == 0) out.push_back({r, c0});
    return out;
}

std::array<GridPoint, 6> face_corners(const GridFace& f) {
    const int r = f.r, c0 = f.c0;
    return {GridPoint{r + 1, c0},     GridPoint{r, c0},         GridPoint{r, c0 + 1},
            GridPoint{r, c0 + 2},     GridPoint{r + 1, c0 + 2}, GridPoint{r + 1, c0 + 1}};
}

std::string ivp_kind_name(IvpKind kind) {
    switch (kind) {
        case IvpKind::Staircase: return "staircase";
        case IvpKind::Corner: return "corner";
        case IvpKind::Column: return "column";
        case IvpKind::Row: return "row";
        case IvpKind::Explicit: return "explicit";
    }
    throw Error("unreachable ivp kind");
}

IvpKind ivp_kind_parse(const std::string& name) {
    for (IvpKind k : {IvpKind::Staircase, IvpKind::Corner, IvpKind::Column, IvpKind::Row,
                      IvpKind::Explicit})
        if (ivp_kind_name(k) == name) return k;
    throw UnknownRow("unknown ivp pattern: " + name);
}

int default_direction(IvpKind kind) {
    switch (kind) {
        case IvpKind::Staircase: return 4;
        case IvpKind::Corner: return 4;
        case IvpKind::Column: return 5;
        case IvpKind::Row: return 3;
        case IvpKind::Explicit:
            throw DomainMismatch("explicit known sets need an explicit direction");
    }
    throw Error("unreachable ivp kind");
}

namespace {

void check_dims(int rows, int cols) {
    if (rows < 2 || cols < 3 || rows > kMaxLatticeDim || cols > kMaxLatticeDim)
        throw DomainMismatch("lattice dimensions must lie in [2,64] x [3,64]");
}

std::set<GridPoint> pat_staircase(int rows, int cols) {
    std::set<GridPoint> out = {GridPoint{0, 0}};
    for (int m = 0; m + 1 < rows; ++m) {
        bool any = false;
        for (int c = 3 * m; c < 3 * m + 4; ++c)
            if (c < cols) {
                out.insert({m + 1, c});
                any = true;
            }
        if (!any) break;
    }
    return out;
}

std::set<GridPoint> pat_corner(int rows, int cols) {
    int x = std::min(rows - 2, cols - 3);
    if (((x - rows) % 2 + 2) % 2 != 0) --x;
    if (x < 0) throw PatternTooSmall("grid too small for the corner pattern");
    std::set<GridPoint> out;
    for (int c = x; c < cols; ++c) out.insert({rows - 1, c});
    for (int r = 0; r < rows; ++r) {
        int base = x - (rows - 1 - r);
        for (int c : {base, base + 1})
            if (0 <= c && c < cols) out.insert({r, c});
    }
    return out;
}

std::set<GridPoint> pat_column(int rows, int cols) {
    (void)cols;
    std::set<GridPoint> out;
    for (int r = 0; r < rows; ++r) {
        out.insert({r, 0});
        out.insert({r, 1});
    }
    return out;
}

std::set<GridPoint> pat_row(int rows, int cols) {
    std::set<GridPoint> out;
    for (int c = 0; c < cols; ++c) out.insert({rows - 1, c});
    for (int r = 0; r + 1 < rows; ++r) {
        int c0r = cols - 3 - ((cols - 3 + r) % 2);
        if (c0r >= 0) out.insert({r, c0r + 2});
    }
    return out;
}

}  // namespace

std::vector<GridPoint> pattern_points(const IvpSpec& spec) {
    check_dims(spec.rows, spec.cols);
    std::set<GridPoint> out;
    switch (spec.kind) {
        case IvpKind::Staircase: out = pat_staircase(spec.rows, spec.cols); break;
        case IvpKind::Corner: out = pat_corner(spec.rows, spec.cols); break;
        case IvpKind::Column: out = pat_column(spec.rows, spec.cols); break;
        case IvpKind::Row: out = pat_row(spec.rows, spec.cols); break;
        case IvpKind::Explicit:
            for (const GridPoint& p : spec.known) {
                if (p.r < 0 || p.r >= spec.rows || p.c < 0 || p.c >= spec.cols)
                    throw DomainMismatch("explicit known vertex outside the grid");
                out.insert(p);
            }
            break;
    }
    return {out.begin(), out.end()};
}

Closure reachability(int rows, int cols, const std::set<GridPoint>& black, int direction) {
    std::array<int, 4> ins;
    for (int j = 0; j < 4; ++j) ins[j] = (direction + j) % 6;
    const std::array<int, 2> outs = {(direction + 4) % 6, (direction + 5) % 6};

    Closure cl;
    cl.known = black;
    const std::vector<GridFace> fs = lattice_faces(rows, cols);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const GridFace& f : fs) {
            auto cs = face_corners(f);
            bool ready = true;
            for (int s : ins)
                if (!cl.known.count(cs[s])) ready = false;
            if (!ready) continue;
            bool fresh = false;
            for (int s : outs)
                if (cl.known.insert(cs[s]).second) fresh = true;
            if (fresh) {
                cl.fired.push_back(f);
                changed = true;
            }
        }
    }
    return cl;
}

std::array<Rat, 3> sample_lattice_params(ParamDomain domain, Sampler& smp) {
    if (domain == ParamDomain::Elliptic)
        throw EllipticUnavailable("lattice evolution runs in exact arithmetic only");
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::array<Rat, 3> ps;
        for (Rat& p : ps)
            p = domain == ParamDomain::Hyperbolic ? smp.positive_z() : smp.nonzero_rational();
        if (ps[0] != ps[1] && ps[0] != ps[2] && ps[1] != ps[2]) return ps;
    }
    throw GuardExhausted("lattice parameters: distinctness budget exhausted");
}

namespace {

void check_params(ParamDomain domain, const std::array<Rat, 3>& ps) {
    if (domain == ParamDomain::Elliptic)
        throw EllipticUnavailable("lattice evolution runs in exact arithmetic only");
    if (ps[0] == ps[1] || ps[0] == ps[2] || ps[1] == ps[2])
        throw DomainMismatch("lattice parameters must be pairwise distinct");
    for (const Rat& p : ps) {
        if (domain == ParamDomain::Hyperbolic && p <= 0)
            throw DomainMismatch("hyperbolic lattice parameters must be positive Z-values");
        if (domain == ParamDomain::Additive && p == 0)
            throw DomainMismatch("additive lattice parameters must be nonzero");
    }
}

template <class F>
Rat with_provider(const HexLattice& lat, F&& f) {
    if (lat.domain == ParamDomain::Hyperbolic)
        return f(RatHyp3(lat.params[0], lat.params[1], lat.params[2]));
    return f(RatAdd3{lat.params[0], lat.params[1], lat.params[2]});
}

std::string point_id(GridPoint p) {
    return "(" + std::to_string(p.r) + "," + std::to_string(p.c) + ")";
}

std::string face_id(const GridFace& f) {
    return "(" + std::to_string(f.r) + "," + std::to_string(f.c0) + ")";
}

}  // namespace

HexLattice init_lattice(const IvpSpec& spec, const HexSystem& system,
                        const std::array<Rat, 3>& params, std::uint64_t salt) {
    check_dims(spec.rows, spec.cols);
    check_params(system.domain(), params);
    if (spec.direction < -1 || spec.direction > 5)
        throw DomainMismatch("direction must be 0..5");

    HexLattice lat;
    lat.rows = spec.rows;
    lat.cols = spec.cols;
    lat.direction = spec.direction >= 0 ? spec.direction : default_direction(spec.kind);
    lat.seed = spec.seed;
    lat.domain = system.domain();
    lat.params = params;

    std::vector<GridPoint> pts = pattern_points(spec);
    lat.black.insert(pts.begin(), pts.end());

    Closure cl = reachability(spec.rows, spec.cols, lat.black, lat.direction);
    if (cl.fired.empty())
        throw PatternTooSmall("the known set cannot fire any face under direction " +
                              std::to_string(lat.direction));
    lat.closure = std::move(cl.known);

    Sampler smp = Sampler::for_trial(spec.seed, salt);
    for (const GridPoint& p : pts) lat.values[p] = smp.nonzero_rational();
    return lat;
}

namespace {

// One pass over a face: solve whatever the known run determines.  Each of
// the two output slots is computed from the lowest-index row that reads only
// known slots; a value that already exists is re-derived and compared, never
// overwritten.
bool solve_face(HexLattice& lat, const HexSystem& sys, const GridFace& f,
                ConsistencyReport& report) {
    const auto cs = face_corners(f);
    const int u = lat.direction;
    for (int j = 0; j < 4; ++j)
        if (!lat.has(cs[(u + j) % 6])) return false;
    const std::array<int, 2> outs = {(u + 4) % 6, (u + 5) % 6};
    if (lat.has(cs[outs[0]]) && lat.has(cs[outs[1]])) return false;

    std::array<std::optional<Rat>, 6> v6;
    for (int k = 0; k < 6; ++k)
        if (auto it = lat.values.find(cs[k]); it != lat.values.end()) v6[k] = it->second;

    bool progressed = false;
    for (int s : outs) {
        bool solved = false;
        for (int k = 0; k < 6 && !solved; ++k) {
            if (k == s || hex_missing_slot(k) == s) continue;
            bool ready = true;
            for (int j = 0; j < 6 && ready; ++j)
                if (j != hex_missing_slot(k) && j != s && !v6[j]) ready = false;
            if (!ready) continue;

            std::array<Rat, 6> xs;
            for (int j = 0; j < 6; ++j) xs[j] = v6[j] ? *v6[j] : Rat(0);
            Rat val = with_provider(lat, [&](const auto& pp) {
                return hex_solve_slot(sys, k, s, xs, pp);
            });
            if (v6[s]) {
                report.add_exact("duplicate/" + point_id(cs[s]) + "/face" + face_id(f),
                                 *v6[s] == val);
            } else {
                v6[s] = val;
                lat.values[cs[s]] = val;
                progressed = true;
            }
            solved = true;
        }
        if (!solved)
            throw SingularSolve("no solvable row for slot " + std::to_string(s) + " of face " +
                                face_id(f));
    }
    return progressed;
}

std::vector<bool> face_residual_flags(const HexLattice& lat, const HexSystem& sys,
                                      const std::vector<GridFace>& fs,
                                      std::vector<bool>& complete) {
    std::vector<bool> zero(fs.size(), false);
    complete.assign(fs.size(), false);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto cs = face_corners(fs[i]);
        bool all_known = true;
        for (const GridPoint& p : cs)
            if (!lat.has(p)) all_known = false;
        if (!all_known) continue;
        complete[i] = true;
        std::array<Rat, 6> xs;
        for (int k = 0; k < 6; ++k) xs[k] = lat.values.at(cs[k]);
        bool ok = true;
        for (int k = 0; k < 6 && ok; ++k) {
            Rat v = with_provider(lat, [&](const auto& pp) {
                return hex_row_value(sys, k, xs, pp);
            });
            if (v != 0) ok = false;
        }
        zero[i] = ok;
    }
    return zero;
}

}  // namespace

ConsistencyReport evolve(HexLattice& lat, const HexSystem& system, unsigned scramble) {
    if (lat.rows == 0) throw DomainMismatch("evolve: lattice not initialized");
    check_params(system.domain(), lat.params);

    std::vector<GridFace> fs = lattice_faces(lat.rows, lat.cols);
    if (scramble != 0) {
        std::mt19937_64 order(Sampler::subseed(lat.seed, 0x0d0e0 + scramble));
        std::shuffle(fs.begin(), fs.end(), order);
    }

    ConsistencyReport report;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const GridFace& f : fs)
            if (solve_face(lat, system, f, report)) changed = true;
    }

    bool filled = true;
    for (const GridPoint& p : lat.closure)
        if (!lat.has(p)) filled = false;
    if (!filled) {
        // Defensive: the exact fill fires exactly where the abstract closure
        // does, so only a malformed hand-built state can get here.
        std::string frontier;
        int shown = 0;
        for (const GridFace& f : fs) {
            const auto cs = face_corners(f);
            int known = 0;
            for (const GridPoint& p : cs) known += lat.has(p) ? 1 : 0;
            if (known > 0 && known < 6 && shown < 8) {
                frontier += (shown ? ", " : "") + face_id(f) + ":" + std::to_string(known);
                ++shown;
            }
        }
        throw Stalled("evolution stalled before the closure was filled; frontier " + frontier);
    }
    report.add_exact("fill/" + std::to_string(lat.rows) + "x" + std::to_string(lat.cols), true,
                     "filled " + std::to_string(lat.values.size()) + " of " +
                         std::to_string(std::size_t(lat.rows) * std::size_t(lat.cols)) +
                         " vertices");

    std::vector<bool> complete;
    std::vector<bool> zero = face_residual_flags(lat, system, fs, complete);
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (complete[i]) report.add_exact("face/" + face_id(fs[i]), zero[i]);
    return report;
}

IvpRunResult run_ivp(const IvpSpec& spec, const HexSystem& system, unsigned scramble,
                     int attempts) {
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Sampler smp = Sampler::for_trial(spec.seed, 0xbeef00 + std::uint64_t(attempt));
        try {
            std::array<Rat, 3> params = sample_lattice_params(system.domain(), smp);
            HexLattice lat = init_lattice(spec, system, params, std::uint64_t(attempt));
            ConsistencyReport report = evolve(lat, system, scramble);
            return {std::move(lat), std::move(report)};
        } catch (const SingularSolve&) {
            continue;
        }
    }
    throw GuardExhausted("run_ivp: every resampled draw hit a singular solve");
}

nlohmann::ordered_json lattice_to_json(const HexLattice& lat, const HexSystem& system) {
    nlohmann::ordered_json j;
    j["rows"] = lat.rows;
    j["cols"] = lat.cols;
    j["system"] = system.name();
    j["direction"] = lat.direction;
    j["domain"] = lat.domain == ParamDomain::Hyperbolic ? "hyperbolic" : "additive";
    nlohmann::ordered_json pm;
    pm["vertical"] = rat_str(lat.params[2]);
    pm["horizontal_even"] = rat_str(lat.params[0]);
    pm["horizontal_odd"] = rat_str(lat.params[1]);
    j["parameter_map"] = pm;

    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const auto& [p, v] : lat.values) {
        nlohmann::ordered_json e;
        e["row"] = p.r;
        e["col"] = p.c;
        e["value"] = rat_str(v);
        e["initial"] = lat.black.count(p) != 0;
        verts.push_back(e);
    }
    j["vertices"] = verts;

    std::vector<GridFace> fs = lattice_faces(lat.rows, lat.cols);
    std::vector<bool> complete;
    std::vector<bool> zero = face_residual_flags(lat, system, fs, complete);
    nlohmann::ordered_json faces = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        nlohmann::ordered_json e;
        e["row"] = fs[i].r;
        e["col"] = fs[i].c0;
        e["complete"] = bool(complete[i]);
        e["residuals_zero"] = bool(zero[i]);
        faces.push_back(e);
    }
    j["faces"] = faces;
    return j;
}

std::string lattice_to_csv(const HexLattice& lat) {
    std::ostringstream out;
    out << "row,col,value\n";
    for (const auto& [p, v] : lat.values) out << p.r << "," << p.c << "," << rat_str(v) << "\n";
    return out.str();
}

}  // namespace hexlat
