// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hexlat {

// Base class for every error raised by the library.  Consistency-check
// failures are NOT exceptions; they travel in ConsistencyReport entries.
// Exceptions signal configuration problems or singular/degenerate inputs.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Value domains of two operands disagree (rational vs hyperbolic vs complex).
struct DomainMismatch : Error {
    using Error::Error;
};

// An elliptic-family evaluation was requested without an elliptic context,
// or in an exact value domain.
struct EllipticUnavailable : Error {
    using Error::Error;
};

// The requested operation is not defined for this family (e.g. the linear
// face-coefficient extraction for the degree-10 elliptic face family).
struct UnsupportedFamily : Error {
    using Error::Error;
};

// A (symmetry kind, family) pair the theory explicitly excludes.
struct NotApplicable : Error {
    using Error::Error;
};

// Fitted-constant proportionality between a face linear part and its quad
// partner failed on a sample; message carries the first counterexample.
struct CorrespondenceFailed : Error {
    using Error::Error;
};

// A linear corner solve met an exactly zero (or below-tolerance) leading
// coefficient.
struct SingularSolve : Error {
    using Error::Error;
};

// g2^3 - 27 g3^2 vanishes: the curve parameters are degenerate.
struct DegenerateCurve : Error {
    using Error::Error;
};

// Weierstrass evaluation hit a lattice point (magnitude blow-up).
struct PoleAtLatticePoint : Error {
    using Error::Error;
};

// Weierstrass evaluation could not reach the requested tolerance within the
// fixed duplication depth.
struct NonConvergent : Error {
    using Error::Error;
};

// A numeric leg evaluation sits too close to a branch point of sqrt / xbar.
struct BranchAmbiguity : Error {
    using Error::Error;
};

// An initial-value pattern cannot seed any complete hexagon.
struct PatternTooSmall : Error {
    using Error::Error;
};

// Lattice evolution made no progress while reachable unknowns remain;
// message carries a frontier snapshot.
struct Stalled : Error {
    using Error::Error;
};

// A (polytope shape, equation combination) pair outside the legal tables.
struct IllegalCombo : Error {
    using Error::Error;
};

// combo_table lookup with an unknown row name.
struct UnknownRow : Error {
    using Error::Error;
};

// Guarded sampling exhausted its resample budget.
struct GuardExhausted : Error {
    using Error::Error;
};

}  // namespace hexlat
