// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "hexlat/errors.hpp"
#include "hexlat/scalar.hpp"

namespace hexlat {

// Deterministic input sampling.  Every scenario derives per-trial engines
// from (seed, trial index) so trials are reproducible independent of order.
class Sampler {
   public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    // splitmix64 step, used to derive independent sub-seeds
    static std::uint64_t subseed(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static Sampler for_trial(std::uint64_t seed, std::uint64_t index) {
        return Sampler(subseed(seed, index));
    }

    // numerator in [-9, 9], denominator in [1, 9]
    Rat rational() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        return Rat(num(eng_), den(eng_));
    }

    Rat nonzero_rational() {
        for (int i = 0; i < 100; ++i) {
            Rat v = rational();
            if (v != 0) return v;
        }
        throw GuardExhausted("nonzero_rational: resample budget exhausted");
    }

    // hyperbolic Z-value in (1/8, 8) excluding 1
    Rat positive_z() {
        std::uniform_int_distribution<int> pick(1, 64);
        for (int i = 0; i < 100; ++i) {
            Rat v(pick(eng_), pick(eng_));
            if (v > Rat(1, 8) && v < 8 && v != 1) return v;
        }
        throw GuardExhausted("positive_z: resample budget exhausted");
    }

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(eng_);
    }

    Cpx complex_box(double s = 1.0) { return Cpx(uniform(-s, s), uniform(-s, s)); }

    std::mt19937_64& engine() { return eng_; }

    // Draws with gen() until pred accepts, up to `budget` attempts.
    template <class Gen, class Pred>
    auto sample_until(Gen gen, Pred pred, int budget = 100) -> decltype(gen()) {
        for (int i = 0; i < budget; ++i) {
            auto v = gen();
            if (pred(v)) return v;
        }
        throw GuardExhausted("sample_until: resample budget exhausted");
    }

   private:
    std::mt19937_64 eng_;
};

// Random curve with a comfortably nonzero discriminant, matching the regime
// numeric tolerances were calibrated in.
inline EllipticContext sample_elliptic_context(Sampler& smp) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        Cpx g2 = smp.complex_box(2.0);
        Cpx g3 = smp.complex_box(2.0);
        if (std::abs(g2 * g2 * g2 - 27.0 * g3 * g3) < 1e-3) continue;
        return EllipticContext(g2, g3);
    }
    throw GuardExhausted("curve sampling: discriminant guard exhausted");
}

}  // namespace hexlat
