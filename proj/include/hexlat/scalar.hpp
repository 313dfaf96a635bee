// SPDX-License-Identifier: Apache-2.0
//
// Value domains used throughout the library: exact rationals (additive
// parameters), exact positive rationals acting as exponentials (hyperbolic
// parameters), and complex doubles with a Weierstrass context (elliptic
// parameters).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hexlat/errors.hpp"

namespace hexlat {

// Expression templates are disabled so arithmetic yields plain values; the
// equation transcriptions pass subexpressions through generic helpers and
// ternaries where lazy proxy types would not type-check.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using Int = boost::multiprecision::cpp_int;
using Cpx = std::complex<double>;

// "p" or "p/q" with q > 0, the serialization used in reports and exports.
std::string rat_str(const Rat& v);
Rat rat_parse(const std::string& text);

// x^n for integer n of either sign; exact for Rat, 0^negative throws.
template <class S>
S ipow(const S& x, long n) {
    if (n == 0) return S(1);
    bool inv = n < 0;
    unsigned long m = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    S acc(1);
    S base = x;
    while (m != 0) {
        if (m & 1UL) acc = acc * base;
        base = base * base;
        m >>= 1UL;
    }
    if (inv) {
        if (acc == S(0)) throw SingularSolve("ipow: inverse of zero");
        return S(1) / acc;
    }
    return acc;
}

// One hyperbolic parameter theta, stored through its exact exponential
// Z = e^theta as a positive rational.
struct HypParam {
    Rat expv;

    explicit HypParam(Rat z) : expv(std::move(z)) {
        if (expv <= 0) throw DomainMismatch("HypParam: Z-value must be positive");
    }
};

enum class HypKind { Exp, Sinh };

// Evaluates e^(sum c_i theta_i) or sinh(sum c_i theta_i) exactly from the
// stored Z-values.  Coefficients are integers, so the result stays rational.
Rat hyp_eval(HypKind kind, const std::vector<long>& coeffs, const std::vector<HypParam>& params);

struct WpValue {
    Cpx p;   // weierstrass p
    Cpx dp;  // its derivative
};

// Invariants (g2, g3) of a nondegenerate curve plus numeric tolerances for
// the complex-arithmetic paths that use it.
class EllipticContext {
   public:
    EllipticContext(Cpx g2, Cpx g3, double tol = 1e-12);

    Cpx g2() const { return g2_; }
    Cpx g3() const { return g3_; }
    double tol() const { return tol_; }

    // Laurent series around 0 plus argument halving and rational duplication
    // back up.  Throws PoleAtLatticePoint / NonConvergent.
    WpValue weierstrass_eval(Cpx z) const;

   private:
    Cpx g2_;
    Cpx g3_;
    double tol_;
    std::vector<Cpx> coeff_;  // c_2.. of the even Laurent tail
};

inline WpValue weierstrass_eval(const EllipticContext& ctx, Cpx z) { return ctx.weierstrass_eval(z); }

}  // namespace hexlat
