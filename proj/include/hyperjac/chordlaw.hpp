#pragma once

#include "hyperjac/divisor.hpp"

namespace hyperjac {

// Which route produced an addition result. The rational genus-2 formulas are
// the fast path; the interpolate-and-reduce route covers every genus; the
// reference compose-reduce path picks up the remaining degenerate inputs.
enum class AdditionPath { GenericRational, GeneralReduction, OracleFallback };

std::string to_string(AdditionPath p);

// Degrees of freedom of the interpolating function y = b(x)/c(x) for the sum
// of divisors of weights h1, h2 after removing r conjugate pairs on a curve
// of genus g. q = -1 signals that the combined divisor is already reduced.
struct InterpolantDegrees {
    int p;
    int q;
    int epsilon;
    bool needs_interpolation() const { return q >= 0; }
};

InterpolantDegrees interp_degrees(int h1, int h2, int g, int r);

// Removes the r maximal conjugate pairs shared between the two divisors:
// the factors of gcd(A1, A2) on which B1 = -B2.
struct CancelResult {
    MumfordDivisor m1;
    MumfordDivisor m2;
    int removed;
};

CancelResult cancel_conjugates(const MumfordDivisor& m1, const MumfordDivisor& m2);

// The interpolating cubic b(x) = b0 x^3 + b1 x^2 + b2 x + b3 through the four
// points underlying a pair of weight-2 genus-2 divisors, computed rationally
// from the chart coordinates, together with the resultant
// N = (beta1-beta2)^2 + (alpha1-alpha2)(alpha1 beta2 - alpha2 beta1).
struct CubicCoefficients {
    FieldElement b0, b1, b2, b3;
    FieldElement resultant;
    Polynomial cubic() const;
};

// Coordinates are (alpha, beta, gamma, delta). Throws NotGeneric when N = 0.
CubicCoefficients cubic_coeffs_from_coords(const std::array<FieldElement, 4>& d1,
                                           const std::array<FieldElement, 4>& d2);
CubicCoefficients cubic_coeffs_rational(const MumfordDivisor& m1, const MumfordDivisor& m2);

// Interpolant y = b(x)/c(x), normalized so the first nonzero entry of the
// stacked coefficient vector is 1.
struct Interpolant {
    Polynomial b;
    Polynomial c;
};

// Interpolant through the supports of two divisors with disjoint supports
// (gcd(A1, A2) = 1), honoring contact multiplicities encoded in (A, B).
Interpolant build_interpolant(const MumfordDivisor& m1, const MumfordDivisor& m2);

// Same, for an arbitrary semi-reduced pair (D, BD) with B_D^2 = p (mod D)
// and deg D > g; used for doubling, where D = A^2 with Newton-lifted B.
Interpolant build_interpolant_semireduced(const CurveRef& curve, const Polynomial& d,
                                          const Polynomial& bd);

// One-step reduction: F = p c^2 - b^2 factors as lc * A1 A2 A3, the result is
// (A3 monic, -b/c mod A3); the sign change reflects the new intersections.
MumfordDivisor reduce_general(const MumfordDivisor& m1, const MumfordDivisor& m2,
                              const Interpolant& interp);
MumfordDivisor reduce_semireduced(const CurveRef& curve, const Polynomial& d,
                                  const Interpolant& interp);

// The rational genus-2 group law on the coordinate chart; requires weight-2
// inputs with N != 0, b0 != 0 and beta1 beta2 != 0, throws NotGeneric otherwise.
MumfordDivisor add_generic_g2(const MumfordDivisor& m1, const MumfordDivisor& m2);
MumfordDivisor add_generic_g2(const MumfordDivisor& m1, const MumfordDivisor& m2,
                              const CubicCoefficients& cc);

struct AddOutcome {
    MumfordDivisor result;
    AdditionPath path;
    // Populated on the generic rational path.
    std::optional<CubicCoefficients> cubic;
};

// Total addition: cancel conjugates, short-circuit already-reduced sums,
// take the rational fast path when generic, interpolate-and-reduce otherwise,
// and fall back to the reference path on any degeneracy.
AddOutcome add(const MumfordDivisor& m1, const MumfordDivisor& m2);

// add(m, m); doubling runs through the tangent contact data so the
// interpolant touches the curve to second order at each point.
MumfordDivisor double_divisor(const MumfordDivisor& m);

// n-fold sum by double-and-add; negative n via negation.
MumfordDivisor scalar_mul(const Integer& n, const MumfordDivisor& m);

}  // namespace hyperjac
