#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperjac/field.hpp"

namespace hyperjac {

// Dense univariate polynomial over one field context, coefficients stored
// lowest degree first with the leading coefficient nonzero. Degrees stay
// small here (at most 2g+4), so no sparse representation.
class Polynomial {
public:
    explicit Polynomial(const Field& f) : field_(f) {}
    Polynomial(const Field& f, std::vector<FieldElement> coeffs_low_first);
    Polynomial(const Field& f, std::initializer_list<long long> coeffs_low_first);

    static Polynomial constant(const FieldElement& c);
    static Polynomial x_power(const Field& f, std::size_t k);
    // (x - r1)(x - r2)...; an empty root list gives 1.
    static Polynomial from_roots(const Field& f, const std::vector<FieldElement>& roots);

    const Field& field() const { return field_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    FieldElement coeff(std::size_t i) const;
    const FieldElement& leading() const;
    FieldElement constant_term() const { return coeff(0); }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    FieldElement eval(const FieldElement& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const FieldElement& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const FieldElement& s) { return a *= s; }
    friend Polynomial operator*(const FieldElement& s, Polynomial a) { return a *= s; }

    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    // Human-readable form like "x^2 + 25*x + 8".
    std::string str() const;

private:
    void trim();
    void check_same_field(const Polynomial& rhs) const;
    Field field_;
    std::vector<FieldElement> coeffs_;
};

struct PolyDivMod {
    Polynomial quotient;
    Polynomial remainder;
};

// Exact division with remainder: n = q*d + r, deg r < deg d.
PolyDivMod poly_divmod(const Polynomial& n, const Polynomial& d);
Polynomial poly_mod(const Polynomial& n, const Polynomial& d);
// Exact quotient; throws InternalError if the division leaves a remainder.
Polynomial poly_exact_div(const Polynomial& n, const Polynomial& d);

// Monic greatest common divisor; gcd(a, 0) = monic(a).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

struct PolyXgcd {
    Polynomial g;  // monic gcd
    Polynomial u;  // g = u*a + v*b
    Polynomial v;
};
PolyXgcd poly_xgcd(const Polynomial& a, const Polynomial& b);

// Inverse of a modulo m; requires gcd(a, m) = 1.
Polynomial poly_inverse_mod(const Polynomial& a, const Polynomial& m);

// The unique B mod m1*m2 with B = b1 (mod m1), B = b2 (mod m2); m1, m2 coprime.
Polynomial poly_crt(const Polynomial& b1, const Polynomial& m1, const Polynomial& b2,
                    const Polynomial& m2);

// base^e mod m.
Polynomial poly_powmod(const Polynomial& base, const Integer& e, const Polynomial& m);

// Resultant with the convention Res(a, b) = lc(b)^deg(a) * prod a(beta_j) over
// the roots beta_j of b, so that for monic quadratics A1, A2 it equals
// (x1-x3)(x1-x4)(x2-x3)(x2-x4) exactly.
FieldElement poly_resultant(const Polynomial& a, const Polynomial& b);

// Lagrange interpolation through points with pairwise distinct x.
Polynomial poly_interpolate(const Field& f,
                            const std::vector<std::pair<FieldElement, FieldElement>>& points);

// Given B^2 = s (mod A) with gcd(2B, A) = 1, lifts to B' with B'^2 = s (mod A^2)
// and B' = B (mod A).
Polynomial poly_sqrt_lift(const Polynomial& s, const Polynomial& a, const Polynomial& b);

// All roots in the base field with multiplicity, or nullopt when some factor
// does not split. Complete over F_p (distinct-degree + equal-degree splitting)
// and over Q (rational root search on the primitive part).
std::optional<std::vector<std::pair<FieldElement, int>>> poly_roots(const Polynomial& a);

// One nonzero kernel vector of the matrix (rows of equal length), or nullopt
// if the kernel is trivial. Deterministic elimination order.
std::optional<std::vector<FieldElement>> solve_kernel(
    const std::vector<std::vector<FieldElement>>& rows, const Field& f, std::size_t cols);

}  // namespace hyperjac
