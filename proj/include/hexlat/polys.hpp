// SPDX-License-Identifier: Apache-2.0
//
// Polynomial transcriptions of every equation family, templated over a
// parameter provider (see params.hpp), so the same text evaluates exactly
// over rationals and numerically over complex doubles.
//
// Each family is transcribed twice: the primary form here and a second,
// independently arranged form in namespace alt.  Tests compare the two on
// random samples; a slip in one transcription is unlikely to reproduce the
// same wrong polynomial in the other.
#pragma once

#include <array>
#include <vector>

#include "hexlat/errors.hpp"
#include "hexlat/families.hpp"
#include "hexlat/params.hpp"

namespace hexlat {

// (expr)^delta with delta in {0,1}; exponent 0 means the literal constant 1.
template <class S>
S pow01(const S& base, int e) {
    return e ? base : S(1);
}

namespace poly {

// --- quads ------------------------------------------------------------------

template <class PP>
typename PP::scalar q1_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0), be = pp.add(0, 1);
    return al * (xa - xc) * (xb - xd) - be * (xa - xb) * (xc - xd) + S(d) * al * be * (al - be);
}

template <class PP>
typename PP::scalar q2_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0), be = pp.add(0, 1);
    return q1_quad(v, pp, 0) +
           al * be * (al - be) * (xa + xb + xc + xd + al * be - al * al - be * be);
}

template <class PP>
typename PP::scalar q3_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S sha = pp.sh(1, 0), shb = pp.sh(0, 1), shab = pp.sh(1, -1);
    return sha * (xa * xb + xc * xd) - shb * (xa * xc + xb * xd) - shab * (xa * xd + xb * xc) -
           S(d) * sha * shb * shab;
}

template <class PP>
typename PP::scalar h1_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp, int e) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0), be = pp.add(0, 1);
    return (xa - xd) * (xb - xc) + S(2) * (al - be) - S(e) * (al - be) * (S(2) + xa + xd);
}

template <class PP>
typename PP::scalar h2_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp, int e) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0), be = pp.add(0, 1);
    S t = (xa - xd) * (xb - xc) - (al - be) * (xa + xb + xc + xd) - (al * al - be * be);
    t += S(e) / S(2) * (al - be) *
         ((S(2) * xa + al + be + S(1)) * (S(2) * xd + al + be + S(1)) + (al - be) * (al - be) -
          S(1));
    return t;
}

template <class PP>
typename PP::scalar h3_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d,
                            int e) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S za = pp.Z(1, 0), zb = pp.Z(0, 1), shab = pp.sh(1, -1), zab = pp.Z(1, 1);
    return za * (xa * xc + xb * xd) - zb * (xa * xb + xc * xd) -
           shab * (S(d * (2 - e)) + S(e) * zab * xa * xd);
}

template <class PP>
typename PP::scalar q4_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S pa = pp.wp(1, 0), da = pp.wpd(1, 0);
    S pb = pp.wp(0, 1), db = pp.wpd(0, 1);
    S pab = pp.wp(1, -1), dab = pp.wpd(1, -1);
    S A = (pa - pb) * (pab - pb);
    S B = (pb - pa) * (pab - pa);
    return da * ((xa - pb) * (xc - pb) - A) * ((xd - pb) * (xb - pb) - A) +
           db * ((xa - pa) * (xb - pa) - B) * ((xc - pa) * (xd - pa) - B) +
           da * db * dab * (pa - pb);
}

// --- faces: linear-in-center coefficients ------------------------------------

template <class PP>
typename PP::scalar a2_p1(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d1,
                          int d2) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0, 0), be = pp.add(0, 1, 0), ga = pp.add(0, 0, 1);
    S phi = al + be - ga;
    return al * (xc - xd) * (xa + xb + S(2 * d2) * be * be) -
           be * (xa - xb) * (xc + xd + S(2 * d2) * al * al) -
           ga * (xb - xd) * (xa + xc + S(2 * d2) * al * be) -
           S(d1) * phi * ga *
               ((al - be) * pow01(xa + xb + xc + xd + ga * phi - al * al - be * be, d2) -
                S(2 * d2) * (al * xa - be * xc));
}

template <class PP>
typename PP::scalar a2_face(const typename PP::scalar& x,
                            const std::array<typename PP::scalar, 4>& v, const PP& pp, int d1,
                            int d2) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0, 0), be = pp.add(0, 1, 0), ga = pp.add(0, 0, 1);
    S phi = al + be - ga;
    S t = x * a2_p1(v, pp, d1, d2);
    t += -al * (xc - xd) * (x * x + xa * xb - S(d1) * be * be * pow01(xa + xb - be * be, d2));
    t += be * (xa - xb) * (x * x + xc * xd - S(d1) * al * al * pow01(xc + xd - al * al, d2));
    t += ga * (xb - xd) *
         (x * x + xa * xc - S(d1) * al * be * pow01(xa + xc - (al - be) * (al - be) - al * be, d2));
    t += S(d1) * ga * phi *
         ((al * xa - be * xc + S(d2) * (al - be) * al * be) *
              pow01(xb + xd + (al - ga) * (ga - be), d2) +
          S(d2) * ((al - be) * (xa * xc - x * x) - al * al * al * xa + be * be * be * xc));
    return t;
}

template <class PP>
typename PP::scalar c2_p1(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d1,
                          int d2, int d3) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0, 0), be = pp.add(0, 1, 0), ga = pp.add(0, 0, 1);
    S phi = al + be - ga;
    return (xa + xb + S(2 * d2) * (be - ga) * be) * (xc - xd) +
           (xa - xb) * (S(2) * be - ga) * pow01(ga - S(2) * al, d3) +
           S(d1) * ga * (xc + xd + (S(2) * al - ga) * pow01(ga - S(2) * al, d3)) *
               pow01(ga - S(2) * al, d2) +
           S(2 * d2) * ga * ((al - ga) * al - xc * xd) +
           S(2 * d3) * ga * ((al - be) * phi + xa * xb);
}

template <class PP>
typename PP::scalar c2_face(const typename PP::scalar& x,
                            const std::array<typename PP::scalar, 4>& v, const PP& pp, int d1,
                            int d2, int d3) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0, 0), be = pp.add(0, 1, 0), ga = pp.add(0, 0, 1);
    S t = x * c2_p1(v, pp, d1, d2, d3);
    t += (x * x - xa * xb) * ga * pow01(ga - S(2) * al, d3) - (x * x + xa * xb) * (xc - xd);
    t += S(d1) * be * (be - ga) * (ga * pow01(ga - S(2) * al, d3) + (xc - xd)) *
         pow01(be * (ga - be) + xa + xb, d2);
    t += -S(2 * d3) * ga * (xa + xb) * x * x;
    t += S(d1) * (be * (xa - xb) - ga * xa) *
         (xc + xd + (S(2) * al - ga) * pow01(ga - S(2) * al, d3) +
          S(2 * d3) * (al * (al - ga) - x * x)) *
         pow01(ga - S(2) * al, d2);
    t += S(2 * d2) * (be * ga * (be - ga) * (al + xc) * (al - ga + xd) +
                      (ga * xa - be * (xa - xb)) * (al * (ga - al) + xc * xd));
    return t;
}

template <class PP>
typename PP::scalar c1_p1(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S ga = pp.add(0, 0, 1);
    return S(2) * ga * pow01(-(xc + xd) / S(2), d) - (xa + xb) * (xc - xd);
}

template <class PP>
typename PP::scalar c1_face(const typename PP::scalar& x,
                            const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S be = pp.add(0, 1, 0), ga = pp.add(0, 0, 1);
    S t = x * c1_p1(v, pp, d);
    t += S(2) * (be * (xa - xb) - ga * xa) * pow01(-(xc + xd) / S(2), d);
    t += (x * x + xa * xb + S(d) * be * (ga - be)) * (xc - xd);
    return t;
}

template <class PP>
typename PP::scalar a3_p1(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S shab = pp.sh(1, -1, 0);   // sh(al - be)
    S shg = pp.sh(0, 0, 1);     // sh(ga)
    S shphi = pp.sh(1, 1, -1);  // sh(al + be - ga)
    return (xa * xc - xb * xd) * shab + (xc * xd - xa * xb) * shg + (xb * xc - xa * xd) * shphi +
           S(d) * shab * shphi * shg;
}

template <class PP>
typename PP::scalar a3_face(const typename PP::scalar& x,
                            const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S shb = pp.sh(0, 1, 0);
    S shbg = pp.sh(0, 1, -1);
    S sha = pp.sh(1, 0, 0);
    S shag = pp.sh(1, 0, -1);
    S shga = pp.sh(-1, 0, 1);
    S shgb = pp.sh(0, -1, 1);
    S t = x * a3_p1(v, pp, d);
    t += shb * (xa * x * x - xb * xc * xd);
    t += -shbg * (xb * x * x - xa * xc * xd);
    t += -sha * (xc * x * x - xa * xb * xd);
    t += shag * (xd * x * x - xa * xb * xc);
    t += S(d) * (shbg * shag * (sha * xa - shb * xc) + sha * shb * (shga * xb - shgb * xd));
    return t;
}

// deltas for the C3 subfamilies are exact scalars (two of them are 1/2)
template <class PP>
typename PP::scalar c3_p1(const std::array<typename PP::scalar, 4>& v, const PP& pp,
                          const typename PP::scalar& d1, const typename PP::scalar& d2,
                          const typename PP::scalar& d3) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S zb = pp.Z(0, 1, 0);
    S zg_zb = pp.Z(0, -1, 1);  // Z(ga - be)
    S inv_za = pp.Z(-1, 0, 0);
    S za_zg = pp.Z(1, 0, -1);  // Z(al - ga)
    S zg2 = pp.Z(0, 0, 2);
    return (xa * xc - xb * xd) * zb + (xb * xc - xa * xd) * zg_zb +
           d1 * (inv_za - S(2) * (d3 * xa * xb - d2 * xc * xd) * za_zg) * (S(1) - zg2);
}

template <class PP>
typename PP::scalar c3_face(const typename PP::scalar& x,
                            const std::array<typename PP::scalar, 4>& v, const PP& pp,
                            const typename PP::scalar& d1, const typename PP::scalar& d2,
                            const typename PP::scalar& d3) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S zb = pp.Z(0, 1, 0);
    S zg = pp.Z(0, 0, 1);
    S zg_zb = pp.Z(0, -1, 1);
    S inv_za = pp.Z(-1, 0, 0);
    S shzb = pp.sh(0, 1, 0);
    S shzbg = pp.sh(0, 1, -1);
    S za2_zg = pp.Z(2, 0, -1);
    S za2_zb = pp.Z(2, -1, 0);
    S za2zb_zg = pp.Z(2, 1, -1);
    S t = x * c3_p1(v, pp, d1, d2, d3);
    t += (xa * xb + S(2) * d2 * shzb * shzbg) * (xd - xc * zg);
    t += (xd * zg - xc) * x * x;
    t += d1 * inv_za * (S(1) + S(2) * d2 * xc * xd * za2_zg) *
         ((zb - S(2) * d3 * za2_zb * x * x) * (xb * zg - xa) +
          (xa * zg - xb) * (zg_zb - S(2) * d3 * za2zb_zg * x * x));
    return t;
}

// --- the degree-10 elliptic face ---------------------------------------------

// Helper bundle for the elliptic face family.  Parameter arguments are
// integer combinations over (al, be, ga).
template <class PP>
struct EllipticFace {
    using S = typename PP::scalar;
    using C = std::array<int, 3>;
    const PP& pp;

    S P(C t) const { return pp.wp(t[0], t[1], t[2]); }
    S dP(C t) const { return pp.wpd(t[0], t[1], t[2]); }
    S g2() const { return pp.curve_g2(); }
    S g3() const { return pp.curve_g3(); }
    S xdot(const S& x) const { return S(4) * x * x * x - g2() * x - g3(); }

    S q(const S& x, C a) const {
        S d = x - P(a);
        return d * d;
    }
    S p0(const S& x, C a) const { return S(2) * g3() + (x + P(a)) * (g2() - S(4) * x * P(a)); }
    S p1(const S& x, C a) const {
        S t = S(4) * x * P(a) + g2();
        return S(16) * (x + P(a)) * g3() + t * t;
    }
    S p2(const S& x, C a1, C a2) const { return dP(a2) * p0(x, a1) + dP(a1) * p0(x, a2); }

    S p3(const S& x, C a1, C a2, C a3) const {
        const C aa[3] = {a1, a2, a3};
        S out = -S(4) * xdot(x) * dP(a1) * dP(a2) * dP(a3);
        for (int i = 0; i < 3; ++i) {
            S prod(1);
            for (int j = 0; j < 3; ++j)
                if (j != i) prod = prod * p0(x, aa[j]);
            out = out - dP(aa[i]) * prod;
        }
        return out;
    }

    S p4(const S& x, C a1, C a2, C a3, C a4) const {
        const C aa[4] = {a1, a2, a3, a4};
        S out(0);
        for (int i = 0; i < 4; ++i) {
            S dprod(1), pprod(1);
            for (int j = 0; j < 4; ++j)
                if (j != i) {
                    dprod = dprod * dP(aa[j]);
                    pprod = pprod * p0(x, aa[j]);
                }
            out = out + S(4) * xdot(x) * p0(x, aa[i]) * dprod + dP(aa[i]) * pprod;
        }
        return out;
    }

    S q1(const S& x, const S& y, C a1, C a2, C a3, C a4) const {
        return p2(x, a1, a2) * (p1(x, a3) * p1(x, a4) - S(256) * q(x, a3) * q(x, a4) * y);
    }
    S q2(const S& x, const S& y1, const S& y2, C a1, C a2, C a3, C a4) const {
        return p2(x, a1, a2) * (p1(x, a3) * q(x, a4) * y1 - p1(x, a4) * q(x, a3) * y2);
    }
    S q3(const S& x, const S& y1, const S& y2, C a1, C a2, C a3, C a4) const {
        return p3(x, a1, a2, a3) * (S(16) * q(x, a4) * y1 - p1(x, a4) * y2);
    }
    S q4(const S& x, const S& y, C a1, C a2, C a3, C a4) const {
        S b3 = S(16) * q(x, a3) * y + p1(x, a3);
        S b4 = S(16) * q(x, a4) * y + p1(x, a4);
        return p1(x, a1) * q(x, a2) * (dP(a3) * b4 + dP(a4) * b3);
    }

    std::vector<S> terms(const S& x, const std::array<S, 4>& v) const {
        const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
        constexpr C AL{1, 0, 0}, BE{0, 1, 0}, GA{0, 0, 1};
        constexpr C NAL{-1, 0, 0}, NBE{0, -1, 0};
        constexpr C AMG{1, 0, -1}, BMG{0, 1, -1};
        constexpr C NAMG{-1, 0, 1}, NBMG{0, -1, 1};
        constexpr C PHI{1, 1, -1}, ALMBE{1, -1, 0};

        S y = xa * xb * xc * xd;
        std::vector<S> out;
        out.reserve(24);
        // weight 1
        out.push_back(q1(x, y, NAL, BE, AMG, BMG));
        out.push_back(q1(x, y, AL, BMG, AMG, BE));
        out.push_back(-q1(x, y, AMG, BE, AL, BMG));
        out.push_back(-q1(x, y, NAMG, BMG, AL, BE));
        // weight -16
        const S w16[] = {
            p4(x, AL, AMG, BE, BMG) * (xb * xc - xa * xd),
            q2(x, xd, xc, BE, BMG, AL, AMG) * (xa + xb),
            p4(x, NAL, NAMG, BE, BMG) * (xa * xc - xb * xd),
            q2(x, xa, xb, AL, AMG, BMG, BE) * (xc + xd),
            q2(x, xa * xb, xc * xd, AL, NBMG, AMG, BE),
            -q2(x, xa * xb, xc * xd, AL, BE, AMG, BMG),
            q2(x, xa * xb, xc * xd, AMG, BMG, AL, BE),
            -q2(x, xa * xb, xc * xd, AMG, NBE, AL, BMG),
        };
        for (const S& w : w16) out.push_back(-S(16) * w);
        // weight 4
        const S w4[] = {
            q3(x, xb * xc * xd, xa, AL, BE, BMG, AMG),
            -q3(x, xb * xc * xd, xa, NAMG, BE, BMG, AL),
            q3(x, xa * xc * xd, xb, NAL, BE, BMG, AMG),
            -q3(x, xa * xc * xd, xb, AMG, BE, BMG, AL),
            -q3(x, xa * xb * xd, xc, AL, AMG, BE, BMG),
            q3(x, xa * xb * xd, xc, AL, AMG, NBMG, BE),
            -q3(x, xa * xb * xc, xd, AL, AMG, NBE, BMG),
            q3(x, xa * xb * xc, xd, AL, AMG, BMG, BE),
            -q4(x, xc * xd, BMG, BE, AL, AMG) * xa,
            q4(x, xc * xd, BE, BMG, AL, AMG) * xb,
            q4(x, xa * xb, AMG, AL, BE, BMG) * xc,
            -q4(x, xa * xb, AL, AMG, BE, BMG) * xd,
        };
        for (const S& w : w4) out.push_back(S(4) * w);

        S x2 = x * x;
        S fourx2g2 = S(4) * x2 + g2();
        S pref = (S(32) * x2 * g3() + fourx2g2 * fourx2g2 - S(16) * P(ALMBE) * xdot(x)) *
                 (P(GA) - P(PHI));
        for (S& w : out) w = pref * w;
        return out;
    }
};

template <class PP>
typename PP::scalar a4_face(const typename PP::scalar& x,
                            const std::array<typename PP::scalar, 4>& v, const PP& pp) {
    EllipticFace<PP> e{pp};
    typename PP::scalar sum(0);
    for (const auto& t : e.terms(x, v)) sum = sum + t;
    return sum;
}

// Value together with the sum of term magnitudes, the scale used for
// relative residuals in the numeric domain.
template <class PP>
std::pair<typename PP::scalar, double> a4_face_scaled(const typename PP::scalar& x,
                                                      const std::array<typename PP::scalar, 4>& v,
                                                      const PP& pp) {
    EllipticFace<PP> e{pp};
    typename PP::scalar sum(0);
    double scale = 0;
    for (const auto& t : e.terms(x, v)) {
        sum = sum + t;
        scale += std::abs(t);
    }
    return {sum, scale};
}

// --- dispatchers --------------------------------------------------------------

template <class PP>
typename PP::scalar quad_value(Family f, const std::array<typename PP::scalar, 4>& v,
                               const PP& pp) {
    switch (f) {
        case Family::Q4: return q4_quad(v, pp);
        case Family::Q3d1: return q3_quad(v, pp, 1);
        case Family::Q3d0: return q3_quad(v, pp, 0);
        case Family::Q2: return q2_quad(v, pp);
        case Family::Q1d1: return q1_quad(v, pp, 1);
        case Family::Q1d0: return q1_quad(v, pp, 0);
        case Family::H3_11: return h3_quad(v, pp, 1, 1);
        case Family::H3_10: return h3_quad(v, pp, 1, 0);
        case Family::H3_00: return h3_quad(v, pp, 0, 0);
        case Family::H2_1: return h2_quad(v, pp, 1);
        case Family::H2_0: return h2_quad(v, pp, 0);
        case Family::H1_1: return h1_quad(v, pp, 1);
        case Family::H1_0: return h1_quad(v, pp, 0);
        default: throw UnsupportedFamily("quad_value: " + family_name(f) + " is a face family");
    }
}

template <class PP>
typename PP::scalar face_value(Family f, const typename PP::scalar& x,
                               const std::array<typename PP::scalar, 4>& v, const PP& pp) {
    using S = typename PP::scalar;
    const S half = S(1) / S(2);
    switch (f) {
        case Family::A3d1: return a3_face(x, v, pp, 1);
        case Family::A3d0: return a3_face(x, v, pp, 0);
        case Family::A2_11: return a2_face(x, v, pp, 1, 1);
        case Family::A2_10: return a2_face(x, v, pp, 1, 0);
        case Family::A2_00: return a2_face(x, v, pp, 0, 0);
        case Family::A4: return a4_face(x, v, pp);
        case Family::C3_hh0: return c3_face(x, v, pp, half, half, S(0));
        case Family::C3_h0h: return c3_face(x, v, pp, half, S(0), half);
        case Family::C3_100: return c3_face(x, v, pp, S(1), S(0), S(0));
        case Family::C3_000: return c3_face(x, v, pp, S(0), S(0), S(0));
        case Family::C2_110: return c2_face(x, v, pp, 1, 1, 0);
        case Family::C2_101: return c2_face(x, v, pp, 1, 0, 1);
        case Family::C2_100: return c2_face(x, v, pp, 1, 0, 0);
        case Family::C2_000: return c2_face(x, v, pp, 0, 0, 0);
        case Family::C1_1: return c1_face(x, v, pp, 1);
        case Family::C1_0: return c1_face(x, v, pp, 0);
        default: throw UnsupportedFamily("face_value: " + family_name(f) + " is a quad family");
    }
}

template <class PP>
typename PP::scalar face_p1_value(Family f, const std::array<typename PP::scalar, 4>& v,
                                  const PP& pp) {
    using S = typename PP::scalar;
    const S half = S(1) / S(2);
    switch (f) {
        case Family::A3d1: return a3_p1(v, pp, 1);
        case Family::A3d0: return a3_p1(v, pp, 0);
        case Family::A2_11: return a2_p1(v, pp, 1, 1);
        case Family::A2_10: return a2_p1(v, pp, 1, 0);
        case Family::A2_00: return a2_p1(v, pp, 0, 0);
        case Family::A4:
            throw UnsupportedFamily("face_p1_value: no published linear coefficient for A4");
        case Family::C3_hh0: return c3_p1(v, pp, half, half, S(0));
        case Family::C3_h0h: return c3_p1(v, pp, half, S(0), half);
        case Family::C3_100: return c3_p1(v, pp, S(1), S(0), S(0));
        case Family::C3_000: return c3_p1(v, pp, S(0), S(0), S(0));
        case Family::C2_110: return c2_p1(v, pp, 1, 1, 0);
        case Family::C2_101: return c2_p1(v, pp, 1, 0, 1);
        case Family::C2_100: return c2_p1(v, pp, 1, 0, 0);
        case Family::C2_000: return c2_p1(v, pp, 0, 0, 0);
        case Family::C1_1: return c1_p1(v, pp, 1);
        case Family::C1_0: return c1_p1(v, pp, 0);
        default: throw UnsupportedFamily("face_p1_value: " + family_name(f) + " is a quad family");
    }
}

}  // namespace poly

// --- second transcriptions ----------------------------------------------------

namespace alt {

template <class PP>
typename PP::scalar q1_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0), be = pp.add(0, 1);
    S t = al * (xa * xb - xa * xd - xc * xb + xc * xd);
    t -= be * (xa * xc - xa * xd - xb * xc + xb * xd);
    if (d) t += al * al * be - al * be * be;
    return t;
}

template <class PP>
typename PP::scalar q2_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0), be = pp.add(0, 1);
    S u = al * be * (al - be);
    return q1_quad(v, pp, 0) + u * (xa + xb + xc + xd) + u * (al * be - al * al - be * be);
}

template <class PP>
typename PP::scalar q3_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S sha = pp.sh(1, 0), shb = pp.sh(0, 1), shab = pp.sh(1, -1);
    S t = sha * xa * xb + sha * xc * xd;
    t -= shb * xa * xc + shb * xb * xd;
    t -= shab * xa * xd + shab * xb * xc;
    if (d) t -= sha * shb * shab;
    return t;
}

template <class PP>
typename PP::scalar h1_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp, int e) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S amb = pp.add(1, -1);
    S t = xa * xb - xa * xc - xd * xb + xd * xc + S(2) * amb;
    if (e) t -= amb * (S(2) + xa + xd);
    return t;
}

template <class PP>
typename PP::scalar h2_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp, int e) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0), be = pp.add(0, 1), amb = pp.add(1, -1);
    S t = xa * xb - xa * xc - xd * xb + xd * xc;
    t -= amb * xa + amb * xb + amb * xc + amb * xd;
    t -= (al + be) * amb;
    if (e) {
        S s1 = al + be + S(1);
        S inner = S(4) * xa * xd + S(2) * xa * s1 + S(2) * xd * s1 + s1 * s1 + amb * amb - S(1);
        t += amb * inner / S(2);
    }
    return t;
}

template <class PP>
typename PP::scalar h3_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d,
                            int e) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S za = pp.Z(1, 0), zb = pp.Z(0, 1), shab = pp.sh(1, -1);
    S t = za * xa * xc + za * xb * xd - zb * xa * xb - zb * xc * xd;
    t -= shab * S(d * (2 - e));
    if (e) t -= shab * pp.Z(1, 1) * xa * xd;
    return t;
}

template <class PP>
typename PP::scalar q4_quad(const std::array<typename PP::scalar, 4>& v, const PP& pp) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S pa = pp.wp(1, 0), da = pp.wpd(1, 0);
    S pb = pp.wp(0, 1), db = pp.wpd(0, 1);
    S pab = pp.wp(1, -1), dab = pp.wpd(1, -1);
    S A = (pa - pb) * (pab - pb);
    S B = (pb - pa) * (pab - pa);
    S uac = (xa - pb) * (xc - pb), udb = (xd - pb) * (xb - pb);
    S vab = (xa - pa) * (xb - pa), vcd = (xc - pa) * (xd - pa);
    S t = da * (uac * udb - A * uac - A * udb + A * A);
    t += db * (vab * vcd - B * vab - B * vcd + B * B);
    t += da * db * dab * pa - da * db * dab * pb;
    return t;
}

template <class PP>
typename PP::scalar a2_p1(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d1,
                          int d2) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0, 0), be = pp.add(0, 1, 0), ga = pp.add(0, 0, 1);
    S phi = pp.add(1, 1, -1);
    S t = al * (xc - xd) * (xa + xb) - be * (xa - xb) * (xc + xd) - ga * (xb - xd) * (xa + xc);
    if (d2) {
        t += S(2) * al * be * (be * (xc - xd) - al * (xa - xb) - ga * (xb - xd));
    }
    if (d1) {
        t -= phi * ga * (al - be) * pow01(xa + xb + xc + xd + ga * phi - al * al - be * be, d2);
        if (d2) t += S(2) * phi * ga * (al * xa - be * xc);
    }
    return t;
}

template <class PP>
typename PP::scalar a2_face(const typename PP::scalar& x,
                            const std::array<typename PP::scalar, 4>& v, const PP& pp, int d1,
                            int d2) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0, 0), be = pp.add(0, 1, 0), ga = pp.add(0, 0, 1);
    S phi = pp.add(1, 1, -1);
    S x2 = x * x;
    S t = x * a2_p1(v, pp, d1, d2);
    t += x2 * (be * (xa - xb) - al * (xc - xd) + ga * (xb - xd));
    t += be * (xa - xb) * xc * xd - al * (xc - xd) * xa * xb + ga * (xb - xd) * xa * xc;
    if (d1) {
        t += al * (xc - xd) * be * be * pow01(xa + xb - be * be, d2);
        t -= be * (xa - xb) * al * al * pow01(xc + xd - al * al, d2);
        t -= ga * (xb - xd) * al * be * pow01(xa + xc - (al - be) * (al - be) - al * be, d2);
        S gate = pow01(xb + xd + (al - ga) * (ga - be), d2);
        t += ga * phi * (al * xa - be * xc) * gate;
        if (d2) {
            t += ga * phi * (al - be) * al * be * gate;
            t += ga * phi * ((al - be) * (xa * xc - x2) - al * al * al * xa + be * be * be * xc);
        }
    }
    return t;
}

template <class PP>
typename PP::scalar c2_p1(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d1,
                          int d2, int d3) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0, 0), be = pp.add(0, 1, 0), ga = pp.add(0, 0, 1);
    S phi = pp.add(1, 1, -1);
    S g2a = pow01(ga - S(2) * al, d3);
    S t = (xa + xb) * (xc - xd) + (xa - xb) * (S(2) * be - ga) * g2a;
    if (d2) t += S(2) * (be - ga) * be * (xc - xd) + S(2) * ga * (al * al - ga * al - xc * xd);
    if (d1) t += ga * pow01(ga - S(2) * al, d2) * (xc + xd + (S(2) * al - ga) * g2a);
    if (d3) t += S(2) * ga * ((al - be) * phi + xa * xb);
    return t;
}

template <class PP>
typename PP::scalar c2_face(const typename PP::scalar& x,
                            const std::array<typename PP::scalar, 4>& v, const PP& pp, int d1,
                            int d2, int d3) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S al = pp.add(1, 0, 0), be = pp.add(0, 1, 0), ga = pp.add(0, 0, 1);
    S x2 = x * x;
    S g2a3 = pow01(ga - S(2) * al, d3);
    S t = x * c2_p1(v, pp, d1, d2, d3);
    t += ga * g2a3 * x2 - ga * g2a3 * xa * xb - x2 * (xc - xd) - xa * xb * (xc - xd);
    if (d1) {
        t += be * (be - ga) * (ga * g2a3 + xc - xd) * pow01(be * (ga - be) + xa + xb, d2);
        S bracket = xc + xd + (S(2) * al - ga) * g2a3;
        if (d3) bracket += S(2) * (al * (al - ga) - x2);
        t += (be * (xa - xb) - ga * xa) * bracket * pow01(ga - S(2) * al, d2);
    }
    if (d3) t -= S(2) * ga * (xa + xb) * x2;
    if (d2) {
        t += S(2) * be * ga * (be - ga) * (al + xc) * (al - ga + xd);
        t += S(2) * (ga * xa - be * xa + be * xb) * (al * ga - al * al + xc * xd);
    }
    return t;
}

template <class PP>
typename PP::scalar c1_p1(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S ga = pp.add(0, 0, 1);
    S t = xa * xd + xb * xd - xa * xc - xb * xc;
    if (d)
        t -= ga * (xc + xd);
    else
        t += S(2) * ga;
    return t;
}

template <class PP>
typename PP::scalar c1_face(const typename PP::scalar& x,
                            const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S be = pp.add(0, 1, 0), ga = pp.add(0, 0, 1);
    S lead = be * (xa - xb) - ga * xa;
    S t = x * c1_p1(v, pp, d);
    t += (d ? -lead * (xc + xd) : S(2) * lead);
    t += (x * x + xa * xb) * (xc - xd);
    if (d) t += be * (ga - be) * (xc - xd);
    return t;
}

template <class PP>
typename PP::scalar a3_p1(const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S shab = pp.sh(1, -1, 0), shg = pp.sh(0, 0, 1), shphi = pp.sh(1, 1, -1);
    S t = shab * xa * xc - shab * xb * xd;
    t += shg * xc * xd - shg * xa * xb;
    t += shphi * xb * xc - shphi * xa * xd;
    if (d) t += shab * shphi * shg;
    return t;
}

template <class PP>
typename PP::scalar a3_face(const typename PP::scalar& x,
                            const std::array<typename PP::scalar, 4>& v, const PP& pp, int d) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S shb = pp.sh(0, 1, 0), shbg = pp.sh(0, 1, -1), sha = pp.sh(1, 0, 0), shag = pp.sh(1, 0, -1);
    S t = x * a3_p1(v, pp, d);
    t += x * x * (shb * xa - shbg * xb - sha * xc + shag * xd);
    t += shbg * xa * xc * xd - shb * xb * xc * xd + sha * xa * xb * xd - shag * xa * xb * xc;
    if (d) {
        t += shbg * shag * sha * xa - shbg * shag * shb * xc;
        t += sha * shb * pp.sh(-1, 0, 1) * xb - sha * shb * pp.sh(0, -1, 1) * xd;
    }
    return t;
}

template <class PP>
typename PP::scalar c3_p1(const std::array<typename PP::scalar, 4>& v, const PP& pp,
                          const typename PP::scalar& d1, const typename PP::scalar& d2,
                          const typename PP::scalar& d3) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S t = pp.Z(0, 1, 0) * (xa * xc - xb * xd);
    t += pp.Z(0, -1, 1) * (xb * xc - xa * xd);
    S one_m_zg2 = S(1) - pp.Z(0, 0, 2);
    t += d1 * pp.Z(-1, 0, 0) * one_m_zg2;
    t -= S(2) * d1 * d3 * xa * xb * pp.Z(1, 0, -1) * one_m_zg2;
    t += S(2) * d1 * d2 * xc * xd * pp.Z(1, 0, -1) * one_m_zg2;
    return t;
}

template <class PP>
typename PP::scalar c3_face(const typename PP::scalar& x,
                            const std::array<typename PP::scalar, 4>& v, const PP& pp,
                            const typename PP::scalar& d1, const typename PP::scalar& d2,
                            const typename PP::scalar& d3) {
    using S = typename PP::scalar;
    const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
    S zg = pp.Z(0, 0, 1);
    S x2 = x * x;
    S t = x * c3_p1(v, pp, d1, d2, d3);
    t += xa * xb * xd - xa * xb * xc * zg;
    t += S(2) * d2 * pp.sh(0, 1, 0) * pp.sh(0, 1, -1) * (xd - xc * zg);
    t += xd * zg * x2 - xc * x2;
    S inner = (pp.Z(0, 1, 0) - S(2) * d3 * pp.Z(2, -1, 0) * x2) * (xb * zg - xa);
    inner += (xa * zg - xb) * (pp.Z(0, -1, 1) - S(2) * d3 * pp.Z(2, 1, -1) * x2);
    t += d1 * pp.Z(-1, 0, 0) * inner;
    t += S(2) * d1 * d2 * xc * xd * pp.Z(1, 0, -1) * inner;
    return t;
}

// Second arrangement of the elliptic face: expanded helper polynomials and a
// reversed accumulation order.
template <class PP>
struct EllipticFaceAlt {
    using S = typename PP::scalar;
    using C = std::array<int, 3>;
    const PP& pp;

    S P(C t) const { return pp.wp(t[0], t[1], t[2]); }
    S dP(C t) const { return pp.wpd(t[0], t[1], t[2]); }

    S xdot(const S& x) const {
        S g2 = pp.curve_g2(), g3 = pp.curve_g3();
        return S(4) * x * x * x - g2 * x - g3;
    }
    S q(const S& x, C a) const {
        S p = P(a);
        return x * x - S(2) * x * p + p * p;
    }
    S p0(const S& x, C a) const {
        S p = P(a), g2 = pp.curve_g2(), g3 = pp.curve_g3();
        return S(2) * g3 + g2 * x + g2 * p - S(4) * x * x * p - S(4) * x * p * p;
    }
    S p1(const S& x, C a) const {
        S p = P(a), g2 = pp.curve_g2(), g3 = pp.curve_g3();
        return S(16) * x * g3 + S(16) * p * g3 + S(16) * x * x * p * p + S(8) * x * p * g2 +
               g2 * g2;
    }
    S p2(const S& x, C a1, C a2) const { return p0(x, a2) * dP(a1) + p0(x, a1) * dP(a2); }
    S p3(const S& x, C a1, C a2, C a3) const {
        S out = -dP(a3) * p0(x, a1) * p0(x, a2);
        out -= dP(a2) * p0(x, a1) * p0(x, a3);
        out -= dP(a1) * p0(x, a2) * p0(x, a3);
        out -= S(4) * xdot(x) * dP(a1) * dP(a2) * dP(a3);
        return out;
    }
    S p4(const S& x, C a1, C a2, C a3, C a4) const {
        const C aa[4] = {a1, a2, a3, a4};
        S acc(0);
        for (int i = 3; i >= 0; --i) {
            S dprod(1), pprod(1);
            for (int j = 3; j >= 0; --j)
                if (j != i) {
                    dprod = dprod * dP(aa[j]);
                    pprod = pprod * p0(x, aa[j]);
                }
            acc = acc + dP(aa[i]) * pprod + S(4) * xdot(x) * p0(x, aa[i]) * dprod;
        }
        return acc;
    }
    S q1(const S& x, const S& y, C a1, C a2, C a3, C a4) const {
        return p2(x, a1, a2) * p1(x, a3) * p1(x, a4) -
               S(256) * p2(x, a1, a2) * q(x, a3) * q(x, a4) * y;
    }
    S q2(const S& x, const S& y1, const S& y2, C a1, C a2, C a3, C a4) const {
        return p2(x, a1, a2) * p1(x, a3) * q(x, a4) * y1 -
               p2(x, a1, a2) * p1(x, a4) * q(x, a3) * y2;
    }
    S q3(const S& x, const S& y1, const S& y2, C a1, C a2, C a3, C a4) const {
        return S(16) * p3(x, a1, a2, a3) * q(x, a4) * y1 - p3(x, a1, a2, a3) * p1(x, a4) * y2;
    }
    S q4(const S& x, const S& y, C a1, C a2, C a3, C a4) const {
        S head = p1(x, a1) * q(x, a2);
        S b3 = S(16) * q(x, a3) * y + p1(x, a3);
        S b4 = S(16) * q(x, a4) * y + p1(x, a4);
        return head * dP(a4) * b3 + head * dP(a3) * b4;
    }

    S value(const S& x, const std::array<S, 4>& v) const {
        const S &xa = v[0], &xb = v[1], &xc = v[2], &xd = v[3];
        constexpr C AL{1, 0, 0}, BE{0, 1, 0}, GA{0, 0, 1};
        constexpr C NAL{-1, 0, 0}, NBE{0, -1, 0};
        constexpr C AMG{1, 0, -1}, BMG{0, 1, -1};
        constexpr C NAMG{-1, 0, 1}, NBMG{0, -1, 1};
        constexpr C PHI{1, 1, -1}, ALMBE{1, -1, 0};

        S y = xa * xb * xc * xd;
        S acc(0);
        acc = acc + S(4) * (-q4(x, xc * xd, BMG, BE, AL, AMG) * xa +
                            q4(x, xc * xd, BE, BMG, AL, AMG) * xb +
                            q4(x, xa * xb, AMG, AL, BE, BMG) * xc -
                            q4(x, xa * xb, AL, AMG, BE, BMG) * xd);
        acc = acc + S(4) * (q3(x, xb * xc * xd, xa, AL, BE, BMG, AMG) -
                            q3(x, xb * xc * xd, xa, NAMG, BE, BMG, AL) +
                            q3(x, xa * xc * xd, xb, NAL, BE, BMG, AMG) -
                            q3(x, xa * xc * xd, xb, AMG, BE, BMG, AL) -
                            q3(x, xa * xb * xd, xc, AL, AMG, BE, BMG) +
                            q3(x, xa * xb * xd, xc, AL, AMG, NBMG, BE) -
                            q3(x, xa * xb * xc, xd, AL, AMG, NBE, BMG) +
                            q3(x, xa * xb * xc, xd, AL, AMG, BMG, BE));
        acc = acc - S(16) * (q2(x, xa * xb, xc * xd, AL, NBMG, AMG, BE) -
                             q2(x, xa * xb, xc * xd, AL, BE, AMG, BMG) +
                             q2(x, xa * xb, xc * xd, AMG, BMG, AL, BE) -
                             q2(x, xa * xb, xc * xd, AMG, NBE, AL, BMG));
        acc = acc - S(16) * (p4(x, AL, AMG, BE, BMG) * (xb * xc - xa * xd) +
                             q2(x, xd, xc, BE, BMG, AL, AMG) * (xa + xb) +
                             p4(x, NAL, NAMG, BE, BMG) * (xa * xc - xb * xd) +
                             q2(x, xa, xb, AL, AMG, BMG, BE) * (xc + xd));
        acc = acc + q1(x, y, NAL, BE, AMG, BMG) + q1(x, y, AL, BMG, AMG, BE) -
              q1(x, y, AMG, BE, AL, BMG) - q1(x, y, NAMG, BMG, AL, BE);

        S g2 = pp.curve_g2(), g3 = pp.curve_g3();
        S x2 = x * x;
        S quart = S(4) * x2 + g2;
        S pref = (S(32) * x2 * g3 + quart * quart - S(16) * P(ALMBE) * xdot(x)) *
                 (P(GA) - P(PHI));
        return pref * acc;
    }
};

template <class PP>
typename PP::scalar quad_value(Family f, const std::array<typename PP::scalar, 4>& v,
                               const PP& pp) {
    switch (f) {
        case Family::Q4: return q4_quad(v, pp);
        case Family::Q3d1: return q3_quad(v, pp, 1);
        case Family::Q3d0: return q3_quad(v, pp, 0);
        case Family::Q2: return q2_quad(v, pp);
        case Family::Q1d1: return q1_quad(v, pp, 1);
        case Family::Q1d0: return q1_quad(v, pp, 0);
        case Family::H3_11: return h3_quad(v, pp, 1, 1);
        case Family::H3_10: return h3_quad(v, pp, 1, 0);
        case Family::H3_00: return h3_quad(v, pp, 0, 0);
        case Family::H2_1: return h2_quad(v, pp, 1);
        case Family::H2_0: return h2_quad(v, pp, 0);
        case Family::H1_1: return h1_quad(v, pp, 1);
        case Family::H1_0: return h1_quad(v, pp, 0);
        default: throw UnsupportedFamily("alt::quad_value: face family");
    }
}

template <class PP>
typename PP::scalar face_value(Family f, const typename PP::scalar& x,
                               const std::array<typename PP::scalar, 4>& v, const PP& pp) {
    using S = typename PP::scalar;
    const S half = S(1) / S(2);
    switch (f) {
        case Family::A3d1: return a3_face(x, v, pp, 1);
        case Family::A3d0: return a3_face(x, v, pp, 0);
        case Family::A2_11: return a2_face(x, v, pp, 1, 1);
        case Family::A2_10: return a2_face(x, v, pp, 1, 0);
        case Family::A2_00: return a2_face(x, v, pp, 0, 0);
        case Family::A4: return EllipticFaceAlt<PP>{pp}.value(x, v);
        case Family::C3_hh0: return c3_face(x, v, pp, half, half, S(0));
        case Family::C3_h0h: return c3_face(x, v, pp, half, S(0), half);
        case Family::C3_100: return c3_face(x, v, pp, S(1), S(0), S(0));
        case Family::C3_000: return c3_face(x, v, pp, S(0), S(0), S(0));
        case Family::C2_110: return c2_face(x, v, pp, 1, 1, 0);
        case Family::C2_101: return c2_face(x, v, pp, 1, 0, 1);
        case Family::C2_100: return c2_face(x, v, pp, 1, 0, 0);
        case Family::C2_000: return c2_face(x, v, pp, 0, 0, 0);
        case Family::C1_1: return c1_face(x, v, pp, 1);
        case Family::C1_0: return c1_face(x, v, pp, 0);
        default: throw UnsupportedFamily("alt::face_value: quad family");
    }
}

}  // namespace alt
}  // namespace hexlat
