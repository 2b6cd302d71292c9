#pragma once

#include "hyperjac/divisor.hpp"

namespace hyperjac {

// Classical composition-and-reduction addition on the divisor class group.
// This is the reference path: implemented from the published algorithm,
// independent of the chord-law code, for cross-validation and fallback.

// Semi-reduced composite of two reduced divisors: with
// d = gcd(A1, A2, B1 + B2), A = A1*A2/d^2 and B = B1 (mod A1/d),
// B = B2 (mod A2/d), B^2 = p (mod A).
std::pair<Polynomial, Polynomial> cantor_compose(const MumfordDivisor& m1,
                                                 const MumfordDivisor& m2);

// Reduction loop A' = (p - B^2)/A, B' = -B mod A' until deg A <= g.
MumfordDivisor cantor_reduce(const CurveRef& curve, Polynomial a, Polynomial b);

MumfordDivisor cantor_add(const MumfordDivisor& m1, const MumfordDivisor& m2);

}  // namespace hyperjac
