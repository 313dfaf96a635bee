// SPDX-License-Identifier: Apache-2.0
//
// Parameter providers.  Equation transcriptions never touch raw parameters;
// they request derived quantities for integer combinations of the base
// parameters (theta = i*p1 + j*p2 [+ k*p3]):
//
//   add(i,j[,k])   the combination itself            (additive domain)
//   Z(i,j[,k])     e^theta                           (hyperbolic domain)
//   sh(i,j[,k])    sinh(theta)                       (hyperbolic domain)
//   wp/wpd(...)    weierstrass p / p' at theta       (elliptic domain)
//
// Exact rational providers implement only the operations their domain
// defines and throw DomainMismatch / EllipticUnavailable otherwise.  The
// complex provider implements everything, so every family can also be
// evaluated numerically.  Parameter substitutions (hex rows, symmetry maps,
// trapezoidal flips) are integer matrices in combination space and apply
// uniformly to all three domains via MappedParams.
#pragma once

#include <array>
#include <complex>
#include <map>

#include "hexlat/errors.hpp"
#include "hexlat/scalar.hpp"

namespace hexlat {

using Mat2 = std::array<std::array<int, 2>, 2>;  // row r: combo of old params for new param r
using Mat3 = std::array<std::array<int, 3>, 3>;

constexpr Mat2 kIdentity2 = {{{1, 0}, {0, 1}}};
constexpr Mat3 kIdentity3 = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

// --- exact rational providers ---------------------------------------------

struct RatAdd2 {
    using scalar = Rat;
    Rat a, b;

    Rat add(int i, int j) const { return i * a + j * b; }
    Rat Z(int, int) const { throw DomainMismatch("Z() in additive domain"); }
    Rat sh(int, int) const { throw DomainMismatch("sh() in additive domain"); }
    Rat wp(int, int) const { throw EllipticUnavailable("wp() in additive domain"); }
    Rat wpd(int, int) const { throw EllipticUnavailable("wp'() in additive domain"); }
    Rat curve_g2() const { throw EllipticUnavailable("g2 in additive domain"); }
    Rat curve_g3() const { throw EllipticUnavailable("g3 in additive domain"); }
};

struct RatAdd3 {
    using scalar = Rat;
    Rat a, b, c;

    Rat add(int i, int j, int k) const { return i * a + j * b + k * c; }
    Rat Z(int, int, int) const { throw DomainMismatch("Z() in additive domain"); }
    Rat sh(int, int, int) const { throw DomainMismatch("sh() in additive domain"); }
    Rat wp(int, int, int) const { throw EllipticUnavailable("wp() in additive domain"); }
    Rat wpd(int, int, int) const { throw EllipticUnavailable("wp'() in additive domain"); }
    Rat curve_g2() const { throw EllipticUnavailable("g2 in additive domain"); }
    Rat curve_g3() const { throw EllipticUnavailable("g3 in additive domain"); }
};

// Hyperbolic parameters live through positive Z-values, so integer combos of
// the underlying angles stay exactly rational.
struct RatHyp2 {
    using scalar = Rat;
    Rat za, zb;

    RatHyp2(Rat z1, Rat z2) : za(std::move(z1)), zb(std::move(z2)) {
        if (za <= 0 || zb <= 0) throw DomainMismatch("hyperbolic Z-values must be positive");
    }

    Rat Z(int i, int j) const { return ipow(za, i) * ipow(zb, j); }
    Rat sh(int i, int j) const {
        Rat z = Z(i, j);
        return (z - 1 / z) / 2;
    }
    Rat add(int, int) const { throw DomainMismatch("add() in hyperbolic domain"); }
    Rat wp(int, int) const { throw EllipticUnavailable("wp() in hyperbolic domain"); }
    Rat wpd(int, int) const { throw EllipticUnavailable("wp'() in hyperbolic domain"); }
    Rat curve_g2() const { throw EllipticUnavailable("g2 in hyperbolic domain"); }
    Rat curve_g3() const { throw EllipticUnavailable("g3 in hyperbolic domain"); }
};

struct RatHyp3 {
    using scalar = Rat;
    Rat za, zb, zc;

    RatHyp3(Rat z1, Rat z2, Rat z3) : za(std::move(z1)), zb(std::move(z2)), zc(std::move(z3)) {
        if (za <= 0 || zb <= 0 || zc <= 0)
            throw DomainMismatch("hyperbolic Z-values must be positive");
    }

    Rat Z(int i, int j, int k) const { return ipow(za, i) * ipow(zb, j) * ipow(zc, k); }
    Rat sh(int i, int j, int k) const {
        Rat z = Z(i, j, k);
        return (z - 1 / z) / 2;
    }
    Rat add(int, int, int) const { throw DomainMismatch("add() in hyperbolic domain"); }
    Rat wp(int, int, int) const { throw EllipticUnavailable("wp() in hyperbolic domain"); }
    Rat wpd(int, int, int) const { throw EllipticUnavailable("wp'() in hyperbolic domain"); }
    Rat curve_g2() const { throw EllipticUnavailable("g2 in hyperbolic domain"); }
    Rat curve_g3() const { throw EllipticUnavailable("g3 in hyperbolic domain"); }
};

// --- complex provider -------------------------------------------------------

struct CpxParams2 {
    using scalar = Cpx;
    Cpx a, b;
    const EllipticContext* ctx = nullptr;

    CpxParams2(Cpx p1, Cpx p2, const EllipticContext* c = nullptr) : a(p1), b(p2), ctx(c) {}

    Cpx add(int i, int j) const { return double(i) * a + double(j) * b; }
    Cpx Z(int i, int j) const { return std::exp(add(i, j)); }
    Cpx sh(int i, int j) const { return std::sinh(add(i, j)); }

    WpValue wp_pair(int i, int j) const {
        if (!ctx) throw EllipticUnavailable("wp(): no elliptic context attached");
        auto it = memo_.find({i, j});
        if (it != memo_.end()) return it->second;
        WpValue v = ctx->weierstrass_eval(add(i, j));
        memo_.emplace(std::array<int, 2>{i, j}, v);
        return v;
    }
    Cpx wp(int i, int j) const { return wp_pair(i, j).p; }
    Cpx wpd(int i, int j) const { return wp_pair(i, j).dp; }
    Cpx curve_g2() const {
        if (!ctx) throw EllipticUnavailable("g2: no elliptic context attached");
        return ctx->g2();
    }
    Cpx curve_g3() const {
        if (!ctx) throw EllipticUnavailable("g3: no elliptic context attached");
        return ctx->g3();
    }

   private:
    mutable std::map<std::array<int, 2>, WpValue> memo_;
};

struct CpxParams3 {
    using scalar = Cpx;
    Cpx a, b, c;
    const EllipticContext* ctx = nullptr;

    CpxParams3(Cpx p1, Cpx p2, Cpx p3, const EllipticContext* cx = nullptr)
        : a(p1), b(p2), c(p3), ctx(cx) {}

    Cpx add(int i, int j, int k) const { return double(i) * a + double(j) * b + double(k) * c; }
    Cpx Z(int i, int j, int k) const { return std::exp(add(i, j, k)); }
    Cpx sh(int i, int j, int k) const { return std::sinh(add(i, j, k)); }

    WpValue wp_pair(int i, int j, int k) const {
        if (!ctx) throw EllipticUnavailable("wp(): no elliptic context attached");
        auto it = memo_.find({i, j, k});
        if (it != memo_.end()) return it->second;
        WpValue v = ctx->weierstrass_eval(add(i, j, k));
        memo_.emplace(std::array<int, 3>{i, j, k}, v);
        return v;
    }
    Cpx wp(int i, int j, int k) const { return wp_pair(i, j, k).p; }
    Cpx wpd(int i, int j, int k) const { return wp_pair(i, j, k).dp; }
    Cpx curve_g2() const {
        if (!ctx) throw EllipticUnavailable("g2: no elliptic context attached");
        return ctx->g2();
    }
    Cpx curve_g3() const {
        if (!ctx) throw EllipticUnavailable("g3: no elliptic context attached");
        return ctx->g3();
    }

   private:
    mutable std::map<std::array<int, 3>, WpValue> memo_;
};

// --- parameter substitution -------------------------------------------------

// Presents (p1', p2') = M * (p1, p2) in combination space: a combo (i, j)
// over the new parameters is forwarded as the matrix-multiplied combo over
// the base provider's parameters.
template <class Base>
struct MappedParams2 {
    using scalar = typename Base::scalar;
    const Base& base;
    Mat2 m;

    std::array<int, 2> fwd(int i, int j) const {
        return {i * m[0][0] + j * m[1][0], i * m[0][1] + j * m[1][1]};
    }
    scalar add(int i, int j) const {
        auto t = fwd(i, j);
        return base.add(t[0], t[1]);
    }
    scalar Z(int i, int j) const {
        auto t = fwd(i, j);
        return base.Z(t[0], t[1]);
    }
    scalar sh(int i, int j) const {
        auto t = fwd(i, j);
        return base.sh(t[0], t[1]);
    }
    scalar wp(int i, int j) const {
        auto t = fwd(i, j);
        return base.wp(t[0], t[1]);
    }
    scalar wpd(int i, int j) const {
        auto t = fwd(i, j);
        return base.wpd(t[0], t[1]);
    }
    scalar curve_g2() const { return base.curve_g2(); }
    scalar curve_g3() const { return base.curve_g3(); }
};

template <class Base>
struct MappedParams3 {
    using scalar = typename Base::scalar;
    const Base& base;
    Mat3 m;

    std::array<int, 3> fwd(int i, int j, int k) const {
        return {i * m[0][0] + j * m[1][0] + k * m[2][0],
                i * m[0][1] + j * m[1][1] + k * m[2][1],
                i * m[0][2] + j * m[1][2] + k * m[2][2]};
    }
    scalar add(int i, int j, int k) const {
        auto t = fwd(i, j, k);
        return base.add(t[0], t[1], t[2]);
    }
    scalar Z(int i, int j, int k) const {
        auto t = fwd(i, j, k);
        return base.Z(t[0], t[1], t[2]);
    }
    scalar sh(int i, int j, int k) const {
        auto t = fwd(i, j, k);
        return base.sh(t[0], t[1], t[2]);
    }
    scalar wp(int i, int j, int k) const {
        auto t = fwd(i, j, k);
        return base.wp(t[0], t[1], t[2]);
    }
    scalar wpd(int i, int j, int k) const {
        auto t = fwd(i, j, k);
        return base.wpd(t[0], t[1], t[2]);
    }
    scalar curve_g2() const { return base.curve_g2(); }
    scalar curve_g3() const { return base.curve_g3(); }
};

template <class Base>
MappedParams2<Base> map_params(const Base& base, const Mat2& m) {
    return {base, m};
}
template <class Base>
MappedParams3<Base> map_params(const Base& base, const Mat3& m) {
    return {base, m};
}

}  // namespace hexlat
