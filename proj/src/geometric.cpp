#include "hyperjac/geometric.hpp"

#include <cmath>

namespace hyperjac {

double RealCurve::rhs(double x) const {
    double acc = 0.0;
    for (double c : coeffs) acc = acc * x + c;
    return acc;
}

RealCurve RealCurve::from_curve(const HyperellipticCurve& c) {
    if (!c.field().is_rational())
        throw DomainError("the real construction needs a curve over the rationals");
    if (c.genus() != 2) throw DomainError("the real construction is genus-2 only");
    RealCurve rc{};
    for (int i = 0; i < 6; ++i)
        rc.coeffs[static_cast<std::size_t>(i)] =
            c.rhs().coeff(static_cast<std::size_t>(5 - i)).value().convert_to<double>();
    return rc;
}

double GeometricSum::cubic_at(double x) const {
    double acc = 0.0;
    for (double c : cubic) acc = acc * x + c;
    return acc;
}

GeometricSum geometric_add_real(const RealCurve& curve, const std::array<RealPoint, 4>& pts,
                                double tol) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::fabs(pts[i].x) <= tol)
            throw NotGeneric("input x-coordinates must be nonzero");
        for (std::size_t j = i + 1; j < 4; ++j)
            if (std::fabs(pts[i].x - pts[j].x) <= tol)
                throw NotGeneric("input x-coordinates must be distinct");
    }

    // Lagrange cubic through the four points, accumulated leading-first.
    std::array<double, 4> b{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) {
        std::array<double, 4> term{0.0, 0.0, 0.0, 1.0};  // constant 1, low degree last
        double den = 1.0;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j == i) continue;
            // multiply by (x - x_j)
            std::array<double, 4> next{0.0, 0.0, 0.0, 0.0};
            for (std::size_t k = 1; k < 4; ++k) next[k - 1] += term[k];
            for (std::size_t k = 0; k < 4; ++k) next[k] -= pts[j].x * term[k];
            term = next;
            den *= pts[i].x - pts[j].x;
        }
        for (std::size_t k = 0; k < 4; ++k) b[k] += pts[i].y * term[k] / den;
    }
    if (std::fabs(b[0]) <= tol) throw NotGeneric("interpolating cubic degenerates (b0 ~ 0)");

    const double a0 = curve.coeffs[0];
    const double a5 = curve.coeffs[5];
    double sum4 = 0.0, prod4 = 1.0;
    for (const auto& p : pts) {
        sum4 += p.x;
        prod4 *= p.x;
    }
    const double sum6 = (a0 - 2.0 * b[0] * b[1]) / (b[0] * b[0]);
    const double prod6 = (b[3] * b[3] - a5) / (b[0] * b[0]);
    // x^2 + B x + C with roots x5, x6.
    const double qb = sum4 - sum6;
    const double qc = prod6 / prod4;

    GeometricSum out{};
    out.cubic = b;
    const double disc = qb * qb - 4.0 * qc;
    if (disc < 0.0) {
        out.complex_pair = true;
        const double re = -qb / 2.0;
        const double im = std::sqrt(-disc) / 2.0;
        out.x5 = {re, im};
        out.x6 = {re, -im};
        return out;
    }
    out.complex_pair = false;
    double x5, x6;
    if (qb == 0.0 && disc == 0.0) {
        x5 = x6 = 0.0;
    } else {
        const double s = std::sqrt(disc);
        const double q = -(qb + (qb >= 0.0 ? s : -s)) / 2.0;
        x5 = q;
        x6 = (q != 0.0) ? qc / q : -qb - q;
    }
    out.x5 = x5;
    out.x6 = x6;
    out.reflected = {RealPoint{x5, -out.cubic_at(x5)}, RealPoint{x6, -out.cubic_at(x6)}};
    return out;
}

}  // namespace hyperjac
