// SPDX-License-Identifier: Apache-2.0
#include "hexlat/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace hexlat {

std::string rat_str(const Rat& v) {
    std::ostringstream os;
    os << numerator(v);
    if (denominator(v) != 1) os << '/' << denominator(v);
    return os.str();
}

Rat rat_parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw DomainMismatch("rat_parse: zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw DomainMismatch("rat_parse: malformed rational '" + text + "'");
    }
}

Rat hyp_eval(HypKind kind, const std::vector<long>& coeffs, const std::vector<HypParam>& params) {
    if (coeffs.size() != params.size())
        throw DomainMismatch("hyp_eval: coefficient/parameter count mismatch");
    Rat z(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) z *= ipow(params[i].expv, coeffs[i]);
    if (kind == HypKind::Exp) return z;
    return (z - 1 / z) / 2;
}

namespace {

// Series seed radius and term count.  The even Laurent tail is carried
// through z^26; past |z| = 0.3 the argument is halved first, which keeps the
// truncation error well under the default context tolerance.
constexpr double kSeedRadius = 0.3;
constexpr int kSeedTerms = 14;   // c_2 .. c_14
constexpr int kMaxHalvings = 40;

}  // namespace

EllipticContext::EllipticContext(Cpx g2, Cpx g3, double tol) : g2_(g2), g3_(g3), tol_(tol) {
    Cpx disc = g2 * g2 * g2 - 27.0 * g3 * g3;
    double scale = std::max(1.0, std::max(std::abs(g2), std::abs(g3)));
    if (std::abs(disc) <= 1e-12 * scale * scale * scale)
        throw DegenerateCurve("EllipticContext: g2^3 - 27 g3^2 vanishes");
    if (!(tol > 0)) throw DomainMismatch("EllipticContext: tolerance must be positive");

    coeff_.assign(kSeedTerms + 1, Cpx(0));
    coeff_[2] = g2_ / 20.0;
    coeff_[3] = g3_ / 28.0;
    for (int k = 4; k <= kSeedTerms; ++k) {
        Cpx acc(0);
        for (int m = 2; m <= k - 2; ++m) acc += coeff_[m] * coeff_[k - m];
        coeff_[k] = 3.0 * acc / ((2.0 * k + 1.0) * (k - 3.0));
    }
}

WpValue EllipticContext::weierstrass_eval(Cpx z) const {
    if (std::abs(z) < 1e-12) throw PoleAtLatticePoint("weierstrass_eval: z at lattice point");

    int halvings = 0;
    while (std::abs(z) > kSeedRadius) {
        z /= 2.0;
        if (++halvings > kMaxHalvings)
            throw NonConvergent("weierstrass_eval: argument reduction exceeded depth limit");
    }

    Cpx z2 = z * z;
    Cpx p = 1.0 / z2;
    Cpx dp = -2.0 / (z2 * z);
    Cpx zpow = z2;  // z^(2k-2)
    for (int k = 2; k <= kSeedTerms; ++k) {
        p += coeff_[k] * zpow;
        dp += (2.0 * k - 2.0) * coeff_[k] * zpow / z;
        zpow *= z2;
    }

    // Rational duplication: doubles the argument back up each round.
    for (int i = 0; i < halvings; ++i) {
        if (std::abs(dp) < 1e-280 || std::abs(p) > 1e140)
            throw PoleAtLatticePoint("weierstrass_eval: duplication hit a pole");
        Cpx m = (6.0 * p * p - g2_ / 2.0) / dp;
        Cpx p2 = m * m / 4.0 - 2.0 * p;
        Cpx dp2 = -(dp + m * (p2 - p));
        p = p2;
        dp = dp2;
    }
    return {p, dp};
}

}  // namespace hexlat
