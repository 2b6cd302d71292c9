#include "hyperjac/cantor.hpp"

namespace hyperjac {

std::pair<Polynomial, Polynomial> cantor_compose(const MumfordDivisor& m1,
                                                 const MumfordDivisor& m2) {
    if (!same_curve(m1.curve(), m2.curve())) throw DomainError("divisors live on different curves");
    const CurveRef& curve = m1.curve();
    const Polynomial& a1 = m1.a_poly();
    const Polynomial& a2 = m2.a_poly();
    const Polynomial& b1 = m1.b_poly();
    const Polynomial& b2 = m2.b_poly();

    auto e = poly_xgcd(a1, a2);                 // e.g = e.u*a1 + e.v*a2
    auto c = poly_xgcd(e.g, b1 + b2);           // c.g = c.u*e.g + c.v*(b1+b2)
    const Polynomial& d = c.g;                  // gcd(a1, a2, b1+b2)
    Polynomial s1 = c.u * e.u;
    Polynomial s2 = c.u * e.v;
    const Polynomial& s3 = c.v;

    Polynomial a = poly_exact_div(a1 * a2, d * d);
    Polynomial num = s1 * a1 * b2 + s2 * a2 * b1 + s3 * (b1 * b2 + curve->rhs());
    Polynomial b = poly_mod(poly_exact_div(num, d), a);
    return {std::move(a), std::move(b)};
}

MumfordDivisor cantor_reduce(const CurveRef& curve, Polynomial a, Polynomial b) {
    const int g = curve->genus();
    Polynomial check = poly_mod(b * b - curve->rhs(), a);
    if (!check.is_zero()) throw InternalError("cantor_reduce: input is not semi-reduced");
    int steps = 0;
    const int cap = a.degree();
    while (a.degree() > g) {
        if (++steps > cap) throw InternalError("cantor_reduce failed to terminate");
        Polynomial next_a = poly_exact_div(curve->rhs() - b * b, a);
        next_a = next_a.monic();
        Polynomial next_b = poly_mod(-b, next_a);
        a = std::move(next_a);
        b = std::move(next_b);
    }
    return MumfordDivisor(curve, a.monic(), poly_mod(b, a));
}

MumfordDivisor cantor_add(const MumfordDivisor& m1, const MumfordDivisor& m2) {
    auto [a, b] = cantor_compose(m1, m2);
    return cantor_reduce(m1.curve(), std::move(a), std::move(b));
}

}  // namespace hyperjac
