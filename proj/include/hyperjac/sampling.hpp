#pragma once

#include <cstdint>
#include <optional>

#include "hyperjac/divisor.hpp"

namespace hyperjac {

// Deterministic splitmix64 stream; self-contained so that seeded runs produce
// identical bytes on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    // Uniform in [0, n) by rejection.
    std::uint64_t below_u64(std::uint64_t n);
    Integer below(const Integer& n);
    bool coin() { return (next_u64() & 1) != 0; }

    // Uniform residue over F_p; a small random fraction over Q.
    FieldElement element(const Field& f);
    FieldElement nonzero_element(const Field& f);

    // Independent per-trial stream derived from (seed, index).
    static Rng fork(std::uint64_t seed, std::uint64_t index);

private:
    std::uint64_t state_;
};

// A random affine point, or nullopt if none was hit within max_tries
// (possible only on tiny fields).
std::optional<CurvePoint> random_point(Rng& rng, const CurveRef& curve, int max_tries = 128);

// Weight-2 divisor from two points with distinct x (occasionally a doubled
// point for the tangent shape).
MumfordDivisor random_weight2_divisor(Rng& rng, const CurveRef& curve);

// Mixed shapes: mostly full weight, sometimes the identity, a single point,
// a divisor containing a Weierstrass point, or a doubled point.
MumfordDivisor random_reduced_divisor(Rng& rng, const CurveRef& curve);

// Random valid curve of the given genus (squarefree right-hand side).
CurveRef random_curve(Rng& rng, const Field& f, int genus, int max_tries = 4096);

}  // namespace hyperjac
