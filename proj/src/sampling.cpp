#include "hyperjac/sampling.hpp"

#include <vector>

namespace hyperjac {

std::uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below_u64(std::uint64_t n) {
    if (n == 0) throw DomainError("below_u64(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        std::uint64_t v = next_u64();
        if (v < limit) return v % n;
    }
}

Integer Rng::below(const Integer& n) {
    if (n <= 0) throw DomainError("below() needs a positive bound");
    if (n <= UINT64_MAX) return Integer(below_u64(n.convert_to<std::uint64_t>()));
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    const unsigned words = (bits + 63) / 64;
    for (;;) {
        Integer v = 0;
        for (unsigned i = 0; i < words; ++i) {
            v <<= 64;
            v |= Integer(next_u64());
        }
        v >>= (words * 64 - bits);
        if (v < n) return v;
    }
}

FieldElement Rng::element(const Field& f) {
    if (f.is_prime_field()) return FieldElement(f, below(f.modulus()));
    Integer num = Integer(below_u64(201)) - 100;
    Integer den = Integer(below_u64(9)) + 1;
    return FieldElement(f, Rational(num, den));
}

FieldElement Rng::nonzero_element(const Field& f) {
    for (;;) {
        FieldElement e = element(f);
        if (!e.is_zero()) return e;
    }
}

Rng Rng::fork(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    mix.next_u64();
    return mix;
}

std::optional<CurvePoint> random_point(Rng& rng, const CurveRef& curve, int max_tries) {
    const Field& f = curve->field();
    for (int i = 0; i < max_tries; ++i) {
        FieldElement x = rng.element(f);
        FieldElement rhs = curve->rhs().eval(x);
        auto y = rhs.sqrt();
        if (!y) continue;
        FieldElement yy = (!y->is_zero() && rng.coin()) ? -*y : *y;
        return CurvePoint::affine(x, yy);
    }
    return std::nullopt;
}

namespace {

// A second point with x distinct from every chosen one.
std::optional<CurvePoint> random_point_fresh_x(Rng& rng, const CurveRef& curve,
                                               const std::vector<CurvePoint>& taken) {
    for (int i = 0; i < 128; ++i) {
        auto p = random_point(rng, curve);
        if (!p) return std::nullopt;
        bool clash = false;
        for (const auto& q : taken)
            if (q.x() == p->x()) clash = true;
        if (!clash) return p;
    }
    return std::nullopt;
}

}  // namespace

MumfordDivisor random_weight2_divisor(Rng& rng, const CurveRef& curve) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto p1 = random_point(rng, curve);
        if (!p1) break;
        if (rng.below_u64(32) == 0 && !p1->y().is_zero()) {
            // doubled point, tangent representation
            return mumford_from_points(PointDivisor(curve, {*p1, *p1}));
        }
        auto p2 = random_point_fresh_x(rng, curve, {*p1});
        if (!p2) continue;
        return mumford_from_points(PointDivisor(curve, {*p1, *p2}));
    }
    throw DomainError("could not sample a weight-2 divisor on " + curve->str());
}

MumfordDivisor random_reduced_divisor(Rng& rng, const CurveRef& curve) {
    const int g = curve->genus();
    const std::uint64_t shape = rng.below_u64(16);
    if (shape == 0) return MumfordDivisor::identity(curve);
    if (shape == 1) {
        auto p = random_point(rng, curve);
        if (p) return mumford_from_points(PointDivisor(curve, {*p}));
        return MumfordDivisor::identity(curve);
    }
    if (shape == 2) {
        // Try to include a Weierstrass point (a root of p(x)).
        auto roots = poly_roots(curve->rhs());
        if (roots && !roots->empty()) {
            const auto& w = (*roots)[rng.below_u64(roots->size())].first;
            std::vector<CurvePoint> pts{
                CurvePoint::affine(w, FieldElement::zero(curve->field()))};
            if (g >= 2 && rng.coin()) {
                auto p = random_point_fresh_x(rng, curve, pts);
                if (p) pts.push_back(*p);
            }
            return mumford_from_points(PointDivisor(curve, pts));
        }
    }
    // Full weight: g points with fresh x-coordinates, occasionally doubling one.
    std::vector<CurvePoint> pts;
    for (int i = 0; i < g; ++i) {
        auto p = random_point_fresh_x(rng, curve, pts);
        if (!p) break;
        pts.push_back(*p);
        if (static_cast<int>(pts.size()) < g && !p->y().is_zero() && rng.below_u64(32) == 0)
            pts.push_back(*p);
        if (static_cast<int>(pts.size()) >= g) break;
    }
    return mumford_from_points(PointDivisor(curve, pts));
}

CurveRef random_curve(Rng& rng, const Field& f, int genus, int max_tries) {
    const std::size_t n = 2 * static_cast<std::size_t>(genus) + 2;
    for (int t = 0; t < max_tries; ++t) {
        std::vector<FieldElement> coeffs;
        coeffs.reserve(n);
        coeffs.push_back(rng.nonzero_element(f));
        for (std::size_t i = 1; i < n; ++i) coeffs.push_back(rng.element(f));
        try {
            return make_curve(f, coeffs, genus);
        } catch (const SingularCurve&) {
            continue;
        }
    }
    throw DomainError("could not sample a squarefree curve over " + f.str());
}

}  // namespace hyperjac
