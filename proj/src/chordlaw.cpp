#include "hyperjac/chordlaw.hpp"

#include <algorithm>

#include "hyperjac/cantor.hpp"

namespace hyperjac {

std::string to_string(AdditionPath p) {
    switch (p) {
        case AdditionPath::GenericRational: return "GenericRational";
        case AdditionPath::GeneralReduction: return "GeneralReduction";
        case AdditionPath::OracleFallback: return "OracleFallback";
    }
    return "?";
}

InterpolantDegrees interp_degrees(int h1, int h2, int g, int r) {
    if (h1 < 0 || h2 < 0 || g < 1) throw DomainError("bad interpolation degree inputs");
    if (r < 0 || r > std::min(h1, h2)) throw DomainError("conjugate pair count out of range");
    const int eps = (h1 + h2 + g) & 1;
    if (h1 + h2 - 2 * r <= g) return {0, -1, eps};
    return {(h1 + h2 + g - 2 * r - eps) / 2, (h1 + h2 - g - 2 * r - 2 + eps) / 2, eps};
}

CancelResult cancel_conjugates(const MumfordDivisor& m1, const MumfordDivisor& m2) {
    if (!same_curve(m1.curve(), m2.curve())) throw DomainError("divisors live on different curves");
    const CurveRef& curve = m1.curve();
    const Polynomial& a1 = m1.a_poly();
    const Polynomial& a2 = m2.a_poly();
    Polynomial d = poly_gcd(a1, a2);
    if (d.degree() == 0) return {m1, m2, 0};
    Polynomial sum = m1.b_poly() + m2.b_poly();
    Polynomial e = sum.is_zero() ? d : poly_gcd(d, sum);
    if (e.degree() == 0) return {m1, m2, 0};
    Polynomial a1r = poly_exact_div(a1, e);
    Polynomial a2r = poly_exact_div(a2, e);
    MumfordDivisor r1(curve, a1r, poly_mod(m1.b_poly(), a1r));
    MumfordDivisor r2(curve, a2r, poly_mod(m2.b_poly(), a2r));
    return {std::move(r1), std::move(r2), e.degree()};
}

Polynomial CubicCoefficients::cubic() const {
    return Polynomial(b0.field(), {b3, b2, b1, b0});
}

CubicCoefficients cubic_coeffs_from_coords(const std::array<FieldElement, 4>& d1,
                                           const std::array<FieldElement, 4>& d2) {
    const auto& [a1, be1, g1, de1] = d1;
    const auto& [a2, be2, g2, de2] = d2;
    FieldElement n = (be1 - be2) * (be1 - be2) + (a1 - a2) * (a1 * be2 - a2 * be1);
    if (n.is_zero()) throw NotGeneric("resultant N vanishes (shared x-coordinate)");
    FieldElement ninv = n.inverse();
    FieldElement dg = g1 - g2;
    FieldElement dd = de1 - de2;
    FieldElement b0 = ((be2 - be1) * dg + (a1 - a2) * dd) * ninv;
    FieldElement b1 = ((a2 * be2 - a1 * be1) * dg + (a1 * a1 - a2 * a2 - be1 + be2) * dd) * ninv;
    FieldElement b2 = (a2 * a2 * be1 * g1 + a1 * a1 * be2 * g2 -
                       a1 * a2 * (be1 * g1 + be2 * g2) +
                       (be1 - be2) * (be1 * g2 - be2 * g1) +
                       (a1 * a2 * (a1 - a2) + (a1 * be2 - a2 * be1)) * dd) *
                      ninv;
    FieldElement b3 = ((a2 - a1) * be1 * be2 * dg + a1 * a1 * be2 * de1 + a2 * a2 * be1 * de2 -
                       a1 * a2 * (be2 * de1 + be1 * de2) +
                       (be1 - be2) * (-be2 * de1 + be1 * de2)) *
                      ninv;
    return {b0, b1, b2, b3, n};
}

CubicCoefficients cubic_coeffs_rational(const MumfordDivisor& m1, const MumfordDivisor& m2) {
    auto c1 = m1.chart_coords();
    auto c2 = m2.chart_coords();
    if (!c1 || !c2)
        throw DomainError("rational cubic coefficients need weight-2 genus-2 divisors");
    return cubic_coeffs_from_coords(*c1, *c2);
}

Interpolant build_interpolant_semireduced(const CurveRef& curve, const Polynomial& d,
                                          const Polynomial& bd) {
    const Field& f = curve->field();
    const int g = curve->genus();
    const int m = d.degree();
    if (m <= g) throw DomainError("semi-reduced divisor is already reduced");
    const int eps = (m + g) & 1;
    const int bp = (m + g - eps) / 2;
    const int cq = (m - g - 2 + eps) / 2;

    // Incidence system: b(x) - B_D(x) c(x) = 0 (mod D); one row per residue
    // coefficient, one column per unknown (b_0..b_p, c_0..c_q, low degree first).
    const std::size_t cols = static_cast<std::size_t>(bp + cq + 2);
    std::vector<std::vector<FieldElement>> rows(
        static_cast<std::size_t>(m), std::vector<FieldElement>(cols, FieldElement::zero(f)));
    for (int i = 0; i <= bp; ++i) {
        // deg x^i < deg D, so the residue is x^i itself.
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = FieldElement::one(f);
    }
    for (int j = 0; j <= cq; ++j) {
        Polynomial t = poly_mod(bd * Polynomial::x_power(f, static_cast<std::size_t>(j)), d);
        for (int i = 0; i < m; ++i)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(bp + 1 + j)] =
                -t.coeff(static_cast<std::size_t>(i));
    }
    auto kernel = solve_kernel(rows, f, cols);
    if (!kernel) throw DegenerateInterpolant("incidence system has no kernel vector");
    // Normalize the first nonzero entry to 1.
    for (auto& v : *kernel) {
        if (!v.is_zero()) {
            FieldElement inv = v.inverse();
            for (auto& w : *kernel) w *= inv;
            break;
        }
    }
    std::vector<FieldElement> bc(kernel->begin(), kernel->begin() + (bp + 1));
    std::vector<FieldElement> cc(kernel->begin() + (bp + 1), kernel->end());
    Polynomial b(f, std::move(bc));
    Polynomial c(f, std::move(cc));
    if (c.is_zero()) throw DegenerateInterpolant("interpolant denominator vanished");
    return {std::move(b), std::move(c)};
}

Interpolant build_interpolant(const MumfordDivisor& m1, const MumfordDivisor& m2) {
    if (!same_curve(m1.curve(), m2.curve())) throw DomainError("divisors live on different curves");
    const Polynomial& a1 = m1.a_poly();
    const Polynomial& a2 = m2.a_poly();
    if (poly_gcd(a1, a2).degree() != 0)
        throw DegenerateInterpolant("supports overlap after cancellation");
    Polynomial d = a1 * a2;
    Polynomial bd = poly_crt(m1.b_poly(), a1, m2.b_poly(), a2);
    return build_interpolant_semireduced(m1.curve(), d, bd);
}

MumfordDivisor reduce_semireduced(const CurveRef& curve, const Polynomial& d,
                                  const Interpolant& interp) {
    const Field& f = curve->field();
    Polynomial residual = curve->rhs() * interp.c * interp.c - interp.b * interp.b;
    if (residual.is_zero()) throw DegenerateInterpolant("p c^2 - b^2 vanished identically");
    auto [quot, rem] = poly_divmod(residual, d);
    if (!rem.is_zero())
        throw InternalError("p c^2 - b^2 is not divisible by the input supports");
    if (quot.degree() > curve->genus())
        throw InternalError("one-step reduction left a divisor of weight > g");
    Polynomial a3 = quot.monic();
    Polynomial b3(f);
    try {
        Polynomial cinv = poly_inverse_mod(poly_mod(interp.c, a3), a3);
        b3 = poly_mod(-interp.b * cinv, a3);
    } catch (const DomainError&) {
        throw DegenerateInterpolant("interpolant denominator not invertible modulo the result");
    }
    return MumfordDivisor(curve, std::move(a3), std::move(b3));
}

MumfordDivisor reduce_general(const MumfordDivisor& m1, const MumfordDivisor& m2,
                              const Interpolant& interp) {
    return reduce_semireduced(m1.curve(), m1.a_poly() * m2.a_poly(), interp);
}

MumfordDivisor add_generic_g2(const MumfordDivisor& m1, const MumfordDivisor& m2,
                              const CubicCoefficients& cc) {
    const CurveRef& curve = m1.curve();
    if (curve->genus() != 2) throw NotGeneric("rational formulas require genus 2");
    auto d1 = m1.chart_coords();
    auto d2 = m2.chart_coords();
    if (!d1 || !d2) throw NotGeneric("divisor off the coordinate chart");
    const FieldElement& be1 = (*d1)[1];
    const FieldElement& be2 = (*d2)[1];
    if (be1.is_zero() || be2.is_zero())
        throw NotGeneric("a support point has x = 0 (beta1 beta2 = 0)");
    if (cc.b0.is_zero()) throw NotGeneric("interpolating cubic degenerates (b0 = 0)");

    const Polynomial& p = curve->rhs();
    const FieldElement a0 = p.leading();        // coefficient of x^5
    const FieldElement a5 = p.constant_term();  // value at 0
    const FieldElement& al1 = (*d1)[0];
    const FieldElement& al2 = (*d2)[0];

    FieldElement b0sq_inv = (cc.b0 * cc.b0).inverse();
    FieldElement two(cc.b0.field(), 2);
    FieldElement al3 = -al1 - al2 - (a0 - two * cc.b0 * cc.b1) * b0sq_inv;
    FieldElement be3 = (cc.b3 * cc.b3 - a5) * b0sq_inv * (be1 * be2).inverse();
    FieldElement ga3 = -cc.b2 + cc.b1 * al3 - cc.b0 * al3 * al3 + cc.b0 * be3;
    FieldElement de3 = -cc.b0 * al3 * be3 + cc.b1 * be3 - cc.b3;

    const Field& f = curve->field();
    Polynomial a3(f, {be3, al3, FieldElement::one(f)});
    Polynomial b3(f, {de3, ga3});
    return MumfordDivisor(curve, std::move(a3), std::move(b3));
}

MumfordDivisor add_generic_g2(const MumfordDivisor& m1, const MumfordDivisor& m2) {
    auto c1 = m1.chart_coords();
    auto c2 = m2.chart_coords();
    if (!c1 || !c2) throw NotGeneric("divisor off the coordinate chart");
    return add_generic_g2(m1, m2, cubic_coeffs_from_coords(*c1, *c2));
}

namespace {

AddOutcome fallback(const MumfordDivisor& m1, const MumfordDivisor& m2) {
    return {cantor_add(m1, m2), AdditionPath::OracleFallback, std::nullopt};
}

}  // namespace

AddOutcome add(const MumfordDivisor& m1, const MumfordDivisor& m2) {
    if (!same_curve(m1.curve(), m2.curve())) throw DomainError("divisors live on different curves");
    const CurveRef& curve = m1.curve();
    const Field& f = curve->field();
    const int g = curve->genus();

    CancelResult cancelled = cancel_conjugates(m1, m2);
    const MumfordDivisor& r1 = cancelled.m1;
    const MumfordDivisor& r2 = cancelled.m2;
    const Polynomial& a1 = r1.a_poly();
    const Polynomial& a2 = r2.a_poly();

    // Compose the remainders into one semi-reduced pair (D, B_D).
    Polynomial d(f);
    Polynomial bd(f);
    bool disjoint = false;
    if (r1.is_identity()) {
        d = a2;
        bd = r2.b_poly();
    } else if (r2.is_identity()) {
        d = a1;
        bd = r1.b_poly();
    } else if (poly_gcd(a1, a2).degree() == 0) {
        disjoint = true;
        d = a1 * a2;
        bd = poly_crt(r1.b_poly(), a1, r2.b_poly(), a2);
    } else if (r1 == r2) {
        // Doubling: conjugate cancellation already stripped every y = 0
        // point, so 2B is invertible and the tangent data lifts to A^2.
        d = a1 * a1;
        try {
            bd = poly_sqrt_lift(curve->rhs(), a1, r1.b_poly());
        } catch (const DomainError&) {
            return fallback(m1, m2);
        }
    } else {
        // Shared support point with equal signs but different divisors;
        // contact orders would have to be merged across the two inputs.
        return fallback(m1, m2);
    }

    if (d.degree() <= g)
        return {MumfordDivisor(curve, d, poly_mod(bd, d)), AdditionPath::GeneralReduction,
                std::nullopt};

    if (g == 2 && disjoint && a1.degree() == 2 && a2.degree() == 2) {
        try {
            CubicCoefficients cc = cubic_coeffs_rational(r1, r2);
            MumfordDivisor res = add_generic_g2(r1, r2, cc);
            return {std::move(res), AdditionPath::GenericRational, std::move(cc)};
        } catch (const NotGeneric&) {
            // fall through to the general reduction
        }
    }

    try {
        Interpolant interp = build_interpolant_semireduced(curve, d, bd);
        return {reduce_semireduced(curve, d, interp), AdditionPath::GeneralReduction,
                std::nullopt};
    } catch (const DegenerateInterpolant&) {
        return fallback(m1, m2);
    }
}

MumfordDivisor double_divisor(const MumfordDivisor& m) { return add(m, m).result; }

MumfordDivisor scalar_mul(const Integer& n, const MumfordDivisor& m) {
    if (n == 0) return MumfordDivisor::identity(m.curve());
    MumfordDivisor base = n < 0 ? m.negate() : m;
    Integer k = boost::multiprecision::abs(n);
    MumfordDivisor acc = base;
    for (int bit = static_cast<int>(boost::multiprecision::msb(k)) - 1; bit >= 0; --bit) {
        acc = add(acc, acc).result;
        if (boost::multiprecision::bit_test(k, static_cast<unsigned>(bit)))
            acc = add(acc, base).result;
    }
    return acc;
}

}  // namespace hyperjac
