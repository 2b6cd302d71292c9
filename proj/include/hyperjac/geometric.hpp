#pragma once

#include <array>
#include <complex>

#include "hyperjac/curve.hpp"

namespace hyperjac {

struct RealPoint {
    double x;
    double y;
};

// Floating-point view of a genus-2 curve for the geometric construction and
// for rendering; exact arithmetic stays elsewhere.
struct RealCurve {
    std::array<double, 6> coeffs;  // a0..a5, leading first

    double rhs(double x) const;
    static RealCurve from_curve(const HyperellipticCurve& c);
};

struct GeometricSum {
    std::array<double, 4> cubic;  // b0..b3, leading first
    std::complex<double> x5;
    std::complex<double> x6;
    bool complex_pair;
    // Reflected output points; meaningful only when !complex_pair.
    std::array<RealPoint, 2> reflected;

    double cubic_at(double x) const;
};

// Chord construction over the reals: the Lagrange cubic through the four
// input points, the quadratic whose roots are the two remaining intersection
// x-coordinates (by the sum/product of all six), and the reflected outputs.
// The pair may come out complex-conjugate; that is reported, not an error.
// Throws NotGeneric when x-coordinates repeat, vanish, or |b0| <= tol.
GeometricSum geometric_add_real(const RealCurve& curve, const std::array<RealPoint, 4>& pts,
                                double tol = 1e-12);

}  // namespace hyperjac
