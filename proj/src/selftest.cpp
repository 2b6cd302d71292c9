#include "hyperjac/selftest.hpp"

#include <sstream>

#include "hyperjac/cantor.hpp"
#include "hyperjac/chordlaw.hpp"
#include "hyperjac/sampling.hpp"

namespace hyperjac {

bool SelftestReport::all_passed() const {
    for (const auto& s : suites)
        if (!s.passed()) return false;
    return true;
}

namespace {

SuiteResult oracle_equivalence(const CurveRef& curve, std::size_t trials, std::uint64_t seed) {
    SuiteResult r{"oracle-equivalence"};
    r.counters["GenericRational"] = 0;
    r.counters["GeneralReduction"] = 0;
    r.counters["OracleFallback"] = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::fork(seed, t);
        MumfordDivisor m1 = random_reduced_divisor(rng, curve);
        MumfordDivisor m2 = random_reduced_divisor(rng, curve);
        AddOutcome out = add(m1, m2);
        ++r.counters[to_string(out.path)];
        ++r.trials;
        if (out.result != cantor_add(m1, m2)) {
            ++r.failures;
            continue;
        }
        if (out.path == AdditionPath::GenericRational) {
            // b(x)^2 - p(x) = b0^2 A1 A2 A3 exactly.
            Polynomial b = out.cubic->cubic();
            Polynomial lhs = b * b - curve->rhs();
            Polynomial rhs = Polynomial::constant(out.cubic->b0 * out.cubic->b0) * m1.a_poly() *
                             m2.a_poly() * out.result.a_poly();
            if (lhs != rhs) ++r.failures;
            // b reduces to the input interpolation data.
            if (poly_mod(b, m1.a_poly()) != m1.b_poly()) ++r.failures;
            if (poly_mod(b, m2.a_poly()) != m2.b_poly()) ++r.failures;
        }
    }
    return r;
}

SuiteResult resultant_identity(const CurveRef& curve, std::size_t trials, std::uint64_t seed) {
    SuiteResult r{"resultant-identity"};
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::fork(seed ^ 0x5a5a5a5aULL, t);
        MumfordDivisor m1 = random_weight2_divisor(rng, curve);
        MumfordDivisor m2 = random_weight2_divisor(rng, curve);
        if (poly_gcd(m1.a_poly(), m2.a_poly()).degree() != 0) continue;
        ++r.trials;
        auto cc = cubic_coeffs_rational(m1, m2);
        if (cc.resultant != poly_resultant(m1.a_poly(), m2.a_poly())) ++r.failures;
    }
    return r;
}

SuiteResult group_axioms(const CurveRef& curve, std::size_t trials, std::uint64_t seed) {
    SuiteResult r{"group-axioms"};
    const MumfordDivisor id = MumfordDivisor::identity(curve);
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::fork(seed ^ 0xc0ffeeULL, t);
        MumfordDivisor a = random_reduced_divisor(rng, curve);
        MumfordDivisor b = random_reduced_divisor(rng, curve);
        MumfordDivisor c = random_reduced_divisor(rng, curve);
        ++r.trials;
        bool ok = true;
        ok = ok && add(a, b).result == add(b, a).result;
        ok = ok && add(add(a, b).result, c).result == add(a, add(b, c).result).result;
        ok = ok && add(a, id).result == a;
        ok = ok && add(a, a.negate()).result.is_identity();
        if (!ok) ++r.failures;
    }
    return r;
}

SuiteResult doubling_limit(const CurveRef& curve, std::size_t trials, std::uint64_t seed) {
    SuiteResult r{"doubling-limit"};
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::fork(seed ^ 0xdddddddULL, t);
        MumfordDivisor m = random_reduced_divisor(rng, curve);
        ++r.trials;
        if (double_divisor(m) != cantor_add(m, m)) ++r.failures;
    }
    return r;
}

}  // namespace

SelftestReport run_selftest(const CurveRef& curve, std::size_t trials, std::uint64_t seed) {
    SelftestReport report;
    report.suites.push_back(oracle_equivalence(curve, trials, seed));
    report.suites.push_back(resultant_identity(curve, trials / 2 + 1, seed));
    report.suites.push_back(group_axioms(curve, trials / 2 + 1, seed));
    report.suites.push_back(doubling_limit(curve, trials / 4 + 1, seed));
    return report;
}

std::string format_report(const SelftestReport& report, const CurveRef& curve, std::size_t trials,
                          std::uint64_t seed) {
    std::ostringstream os;
    os << "selftest: " << curve->str() << "\n";
    os << "trials: " << trials << "  seed: " << seed << "\n";
    for (const auto& s : report.suites) {
        os << (s.passed() ? "[PASS] " : "[FAIL] ") << s.name << "  trials=" << s.trials
           << " failures=" << s.failures;
        for (const auto& [k, v] : s.counters) os << " " << k << "=" << v;
        os << "\n";
    }
    os << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace hyperjac
