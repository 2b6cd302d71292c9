#include "hyperjac/field.hpp"

#include <array>
#include <ostream>
#include <sstream>
#include <utility>

namespace hyperjac {

namespace mp = boost::multiprecision;

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    static const std::array<int, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int b : bases) {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (int b : bases) {
        Integer x = mp::powm(Integer(b), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(const Integer& p) {
    if (p == 2) throw UnsupportedField("characteristic 2 is not supported");
    if (p < 2) throw DomainError("field characteristic must be an odd prime, got " + p.str());
    if (!is_probable_prime(p)) throw DomainError("modulus " + p.str() + " is not prime");
    return Field(p);
}

const Integer& Field::modulus() const {
    if (is_rational()) throw DomainError("the rational field has no modulus");
    return modulus_;
}

std::string Field::str() const {
    return is_rational() ? "rational" : "F_" + modulus_.str();
}

namespace {

Integer mod_reduce(const Integer& v, const Integer& p) {
    Integer r = v % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

FieldElement::FieldElement(const Field& f, const Integer& v) : field_(f), value_() {
    if (f.is_rational()) {
        value_ = Rational(v);
    } else {
        value_ = Rational(mod_reduce(v, f.modulus()));
    }
}

FieldElement::FieldElement(const Field& f, const Rational& v) : field_(f), value_() {
    if (f.is_rational()) {
        value_ = v;
    } else {
        const Integer& p = f.modulus();
        Integer den = mod_reduce(mp::denominator(v), p);
        if (den == 0) throw DomainError("denominator not invertible modulo " + p.str());
        Integer num = mod_reduce(mp::numerator(v), p);
        value_ = Rational(num * mp::powm(den, p - 2, p) % p);
    }
}

Integer FieldElement::residue() const {
    if (field_.is_rational()) throw DomainError("residue() requires a prime field element");
    return mp::numerator(value_);
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
    if (field_ != rhs.field_)
        throw DomainError("field context mismatch: " + field_.str() + " vs " + rhs.field_.str());
}

FieldElement FieldElement::operator-() const {
    if (field_.is_rational()) {
        FieldElement r = *this;
        r.value_ = -r.value_;
        return r;
    }
    return FieldElement(field_, field_.modulus() - mp::numerator(value_));
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_field(rhs);
    if (field_.is_rational()) {
        value_ += rhs.value_;
    } else {
        Integer s = mp::numerator(value_) + mp::numerator(rhs.value_);
        if (s >= field_.modulus()) s -= field_.modulus();
        value_ = Rational(s);
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_field(rhs);
    if (field_.is_rational()) {
        value_ -= rhs.value_;
    } else {
        Integer s = mp::numerator(value_) - mp::numerator(rhs.value_);
        if (s < 0) s += field_.modulus();
        value_ = Rational(s);
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_field(rhs);
    if (field_.is_rational()) {
        value_ *= rhs.value_;
    } else {
        value_ = Rational(mp::numerator(value_) * mp::numerator(rhs.value_) % field_.modulus());
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    return field_ == rhs.field_ && value_ == rhs.value_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (field_.is_rational()) {
        FieldElement r = *this;
        r.value_ = Rational(1) / value_;
        return r;
    }
    const Integer& p = field_.modulus();
    return FieldElement(field_, mp::powm(mp::numerator(value_), p - 2, p));
}

FieldElement FieldElement::pow(const Integer& e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement acc = one(field_);
    Integer k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

int FieldElement::legendre() const {
    if (field_.is_rational()) throw DomainError("Legendre symbol requires a prime field");
    if (is_zero()) return 0;
    const Integer& p = field_.modulus();
    Integer t = mp::powm(mp::numerator(value_), (p - 1) / 2, p);
    return t == 1 ? 1 : -1;
}

namespace {

// Exact integer square root with a perfect-square check.
std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = mp::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

}  // namespace

std::optional<FieldElement> FieldElement::sqrt() const {
    if (is_zero()) return zero(field_);
    if (field_.is_rational()) {
        auto num = integer_sqrt_exact(mp::numerator(value_));
        auto den = integer_sqrt_exact(mp::denominator(value_));
        if (!num || !den) return std::nullopt;
        return FieldElement(field_, Rational(*num, *den));
    }
    if (legendre() != 1) return std::nullopt;
    const Integer& p = field_.modulus();
    const Integer a = mp::numerator(value_);
    // Tonelli-Shanks, seeded with the smallest quadratic non-residue.
    Integer q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    Integer z = 2;
    while (mp::powm(z, (p - 1) / 2, p) != p - 1) ++z;
    Integer m = s;
    Integer c = mp::powm(z, q, p);
    Integer t = mp::powm(a, q, p);
    Integer r = mp::powm(a, (q + 1) / 2, p);
    while (t != 1) {
        Integer i = 0;
        Integer t2 = t;
        while (t2 != 1) {
            t2 = (t2 * t2) % p;
            ++i;
            if (i == m) throw InternalError("Tonelli-Shanks failed to converge");
        }
        Integer b = mp::powm(c, mp::powm(Integer(2), m - i - 1, p - 1), p);
        m = i;
        c = (b * b) % p;
        t = (t * c) % p;
        r = (r * b) % p;
    }
    return FieldElement(field_, r);
}

int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
    a.check_same_field(b);
    if (a.value_ < b.value_) return -1;
    if (b.value_ < a.value_) return 1;
    return 0;
}

std::string FieldElement::str() const {
    if (field_.is_rational() && mp::denominator(value_) != 1)
        return mp::numerator(value_).str() + "/" + mp::denominator(value_).str();
    return mp::numerator(value_).str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.str(); }

}  // namespace hyperjac
