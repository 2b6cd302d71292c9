#include "hyperjac/curve.hpp"

#include <algorithm>
#include <sstream>

namespace hyperjac {

HyperellipticCurve::HyperellipticCurve(const Field& f,
                                       const std::vector<FieldElement>& coeffs_leading_first,
                                       int genus)
    : field_(f), genus_(genus), rhs_(f) {
    if (genus < 1) throw DomainError("genus must be at least 1");
    const std::size_t expected = 2 * static_cast<std::size_t>(genus) + 2;
    if (coeffs_leading_first.size() != expected)
        throw DomainError("expected " + std::to_string(expected) + " coefficients for genus " +
                          std::to_string(genus) + ", got " +
                          std::to_string(coeffs_leading_first.size()));
    for (const auto& c : coeffs_leading_first)
        if (c.field() != f) throw DomainError("curve coefficient from a different field");
    if (coeffs_leading_first.front().is_zero())
        throw DegenerateLeadingCoefficient("leading coefficient a0 must be nonzero");
    std::vector<FieldElement> low_first(coeffs_leading_first.rbegin(),
                                        coeffs_leading_first.rend());
    rhs_ = Polynomial(f, std::move(low_first));
    // Squarefreeness is the single source of truth: gcd(p, p') must be
    // constant. This also handles characteristics where p' loses degree.
    Polynomial d = rhs_.derivative();
    if (d.is_zero() || poly_gcd(rhs_, d).degree() > 0)
        throw SingularCurve("p(x) has a repeated root");
}

std::string HyperellipticCurve::str() const {
    std::ostringstream os;
    os << "y^2 = " << rhs_.str() << " over " << field_.str() << " (genus " << genus_ << ")";
    return os.str();
}

CurveRef make_curve(const Field& f, const std::vector<FieldElement>& coeffs_leading_first,
                    int genus) {
    return std::make_shared<HyperellipticCurve>(f, coeffs_leading_first, genus);
}

CurveRef make_curve(const Field& f, std::initializer_list<long long> coeffs_leading_first,
                    int genus) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(coeffs_leading_first.size());
    for (long long v : coeffs_leading_first) coeffs.emplace_back(f, v);
    return make_curve(f, coeffs, genus);
}

bool same_curve(const CurveRef& a, const CurveRef& b) {
    if (!a || !b) return false;
    return a == b || *a == *b;
}

const FieldElement& CurvePoint::x() const {
    if (is_infinity()) throw DomainError("the point at infinity has no affine coordinates");
    return xy_->first;
}

const FieldElement& CurvePoint::y() const {
    if (is_infinity()) throw DomainError("the point at infinity has no affine coordinates");
    return xy_->second;
}

bool CurvePoint::operator==(const CurvePoint& rhs) const {
    if (is_infinity() || rhs.is_infinity()) return is_infinity() == rhs.is_infinity();
    return x() == rhs.x() && y() == rhs.y();
}

std::string CurvePoint::str() const {
    if (is_infinity()) return "inf";
    return "(" + x().str() + ", " + y().str() + ")";
}

bool on_curve(const HyperellipticCurve& c, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    if (p.x().field() != c.field()) throw DomainError("point and curve fields differ");
    return p.y() * p.y() == c.rhs().eval(p.x());
}

CurvePoint involute(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return CurvePoint::affine(p.x(), -p.y());
}

}  // namespace hyperjac
