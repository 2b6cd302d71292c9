#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperjac/curve.hpp"

namespace hyperjac {

struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    // Named counters (path histogram and the like), printed in key order.
    std::map<std::string, std::size_t> counters;

    bool passed() const { return failures == 0; }
};

struct SelftestReport {
    std::vector<SuiteResult> suites;
    bool all_passed() const;
};

// Randomized invariant suites against the reference path: result equivalence,
// the six-root factorization on the rational path, interpolant consistency,
// the resultant identity, group axioms, doubling, and path statistics.
// Deterministic for a fixed (curve, trials, seed).
SelftestReport run_selftest(const CurveRef& curve, std::size_t trials, std::uint64_t seed);

std::string format_report(const SelftestReport& report, const CurveRef& curve, std::size_t trials,
                          std::uint64_t seed);

}  // namespace hyperjac
