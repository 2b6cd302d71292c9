#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <string>

#include "hyperjac/errors.hpp"

namespace hyperjac {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Deterministic Miller-Rabin with a fixed base set; exact for moduli below
// 3.3e24, a strong probable-prime test beyond that.
bool is_probable_prime(const Integer& n);

// Field descriptor: the rationals or a prime field F_p with p an odd prime.
// Characteristic 2 is rejected because the curve model y^2 = p(x) and the
// involution y -> -y degenerate there.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(const Integer& p);

    bool is_rational() const { return modulus_ == 0; }
    bool is_prime_field() const { return modulus_ != 0; }
    // 0 for the rationals.
    const Integer& characteristic() const { return modulus_; }
    const Integer& modulus() const;

    bool operator==(const Field& other) const { return modulus_ == other.modulus_; }
    bool operator!=(const Field& other) const { return !(*this == other); }

    std::string str() const;

private:
    explicit Field(Integer m) : modulus_(std::move(m)) {}
    Integer modulus_;
};

// Exact scalar: a reduced fraction over Q or a residue in [0, p) over F_p.
// Immutable; all operations are pure and check that contexts match.
class FieldElement {
public:
    FieldElement(const Field& f, const Integer& v);
    FieldElement(const Field& f, const Rational& v);
    FieldElement(const Field& f, long long v) : FieldElement(f, Integer(v)) {}

    static FieldElement zero(const Field& f) { return FieldElement(f, 0); }
    static FieldElement one(const Field& f) { return FieldElement(f, 1); }

    const Field& field() const { return field_; }
    // Canonical value: the reduced fraction over Q, the residue (den = 1) over F_p.
    const Rational& value() const { return value_; }
    // Prime fields only.
    Integer residue() const;

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    FieldElement inverse() const;
    FieldElement pow(const Integer& e) const;

    // Legendre symbol over F_p: -1, 0 or 1.
    int legendre() const;
    // Exact square root if one exists in the field. Over F_p this is a
    // deterministic Tonelli-Shanks using the smallest quadratic non-residue;
    // over Q it is an integer-square test on numerator and denominator.
    std::optional<FieldElement> sqrt() const;

    // Total order inside one field context (residue order over F_p, numeric
    // order over Q); used for canonical sorting only.
    static int compare(const FieldElement& a, const FieldElement& b);

    std::string str() const;

private:
    void check_same_field(const FieldElement& rhs) const;
    Field field_;
    Rational value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace hyperjac
