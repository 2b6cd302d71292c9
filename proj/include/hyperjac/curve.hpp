#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperjac/polynomial.hpp"

namespace hyperjac {

// Odd-degree hyperelliptic curve y^2 = p(x), deg p = 2g+1, p squarefree,
// with a single point at infinity.
class HyperellipticCurve {
public:
    // coeffs are a0..a_{2g+1}, leading coefficient first (length 2g+2).
    // Throws DegenerateLeadingCoefficient, SingularCurve or DomainError.
    HyperellipticCurve(const Field& f, const std::vector<FieldElement>& coeffs_leading_first,
                       int genus);

    const Field& field() const { return field_; }
    int genus() const { return genus_; }
    // The right-hand side p(x).
    const Polynomial& rhs() const { return rhs_; }

    bool operator==(const HyperellipticCurve& other) const {
        return field_ == other.field_ && genus_ == other.genus_ && rhs_ == other.rhs_;
    }
    bool operator!=(const HyperellipticCurve& other) const { return !(*this == other); }

    std::string str() const;

private:
    Field field_;
    int genus_;
    Polynomial rhs_;
};

using CurveRef = std::shared_ptr<const HyperellipticCurve>;

CurveRef make_curve(const Field& f, const std::vector<FieldElement>& coeffs_leading_first,
                    int genus);
CurveRef make_curve(const Field& f, std::initializer_list<long long> coeffs_leading_first,
                    int genus);

bool same_curve(const CurveRef& a, const CurveRef& b);

// A point of the curve: the point at infinity or an affine pair (x, y).
class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(FieldElement x, FieldElement y) {
        return CurvePoint(std::move(x), std::move(y));
    }

    bool is_infinity() const { return !xy_.has_value(); }
    const FieldElement& x() const;
    const FieldElement& y() const;

    bool operator==(const CurvePoint& rhs) const;
    bool operator!=(const CurvePoint& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    CurvePoint() = default;
    CurvePoint(FieldElement x, FieldElement y)
        : xy_(std::make_pair(std::move(x), std::move(y))) {}
    std::optional<std::pair<FieldElement, FieldElement>> xy_;
};

// True iff P is the point at infinity or satisfies y^2 = p(x) exactly.
bool on_curve(const HyperellipticCurve& c, const CurvePoint& p);

// The hyperelliptic involution (x, y) -> (x, -y), fixing infinity.
CurvePoint involute(const CurvePoint& p);

}  // namespace hyperjac
