#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hyperjac/curve.hpp"

namespace hyperjac {

// Reduced divisor in Mumford form: A monic, deg B < deg A <= g, B^2 = p (mod A).
// The identity element is (1, 0). Immutable; every constructed instance is valid.
class MumfordDivisor {
public:
    MumfordDivisor(CurveRef curve, Polynomial a, Polynomial b);

    static MumfordDivisor identity(CurveRef curve);

    const CurveRef& curve() const { return curve_; }
    const Polynomial& a_poly() const { return a_; }
    const Polynomial& b_poly() const { return b_; }
    // deg A: the number of points in the support, with multiplicity.
    int weight() const { return a_.degree(); }
    bool is_identity() const { return a_.is_one(); }

    // (A, -B mod A); the group inverse.
    MumfordDivisor negate() const;

    // The (alpha, beta, gamma, delta) chart of a genus-2 divisor with
    // A = x^2 + alpha*x + beta, B = gamma*x + delta. Weight < 2 divisors
    // (identity and single points) lie outside the chart.
    std::optional<std::array<FieldElement, 4>> chart_coords() const;

    bool operator==(const MumfordDivisor& rhs) const;
    bool operator!=(const MumfordDivisor& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    CurveRef curve_;
    Polynomial a_;
    Polynomial b_;
};

// Validity check for raw (A, B) data against a curve; the MumfordDivisor
// constructor enforces this and throws InvalidDivisor.
bool is_valid_mumford(const HyperellipticCurve& curve, const Polynomial& a, const Polynomial& b);

// Multiset of affine points P_1 + ... + P_h - h*inf, h <= g, stored in a
// canonical sorted order. No conjugate pairs; points with y = 0 at most once.
class PointDivisor {
public:
    PointDivisor(CurveRef curve, std::vector<CurvePoint> points);

    const CurveRef& curve() const { return curve_; }
    const std::vector<CurvePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    bool operator==(const PointDivisor& rhs) const;
    bool operator!=(const PointDivisor& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    CurveRef curve_;
    std::vector<CurvePoint> points_;
};

// Mumford form of a point divisor: A = prod (x - x_i), B the (Hermite)
// interpolant of the y-data; a point of multiplicity m contributes branch
// contact of order m, with slope p'(x1)/(2 y1) at a doubled point.
MumfordDivisor mumford_from_points(const PointDivisor& d);

// Inverse conversion. Returns the point multiset when A splits over the base
// field and nullopt ("irreducible") otherwise; no extension fields.
std::optional<PointDivisor> points_from_mumford(const MumfordDivisor& m);

}  // namespace hyperjac
