#include "hyperjac/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hyperjac {

namespace mp = boost::multiprecision;

Polynomial::Polynomial(const Field& f, std::vector<FieldElement> coeffs_low_first)
    : field_(f), coeffs_(std::move(coeffs_low_first)) {
    for (const auto& c : coeffs_)
        if (c.field() != field_) throw DomainError("polynomial coefficient from a different field");
    trim();
}

Polynomial::Polynomial(const Field& f, std::initializer_list<long long> coeffs_low_first)
    : field_(f) {
    coeffs_.reserve(coeffs_low_first.size());
    for (long long v : coeffs_low_first) coeffs_.emplace_back(f, v);
    trim();
}

Polynomial Polynomial::constant(const FieldElement& c) {
    Polynomial r(c.field());
    if (!c.is_zero()) r.coeffs_.push_back(c);
    return r;
}

Polynomial Polynomial::x_power(const Field& f, std::size_t k) {
    Polynomial r(f);
    r.coeffs_.assign(k + 1, FieldElement::zero(f));
    r.coeffs_.back() = FieldElement::one(f);
    return r;
}

Polynomial Polynomial::from_roots(const Field& f, const std::vector<FieldElement>& roots) {
    Polynomial r = constant(FieldElement::one(f));
    for (const auto& root : roots) {
        Polynomial lin(f, {0, 1});
        lin.coeffs_[0] = -root;
        r *= lin;
    }
    return r;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::check_same_field(const Polynomial& rhs) const {
    if (field_ != rhs.field_) throw DomainError("polynomial field context mismatch");
}

FieldElement Polynomial::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return FieldElement::zero(field_);
}

const FieldElement& Polynomial::leading() const {
    if (coeffs_.empty()) throw DomainError("the zero polynomial has no leading coefficient");
    return coeffs_.back();
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    FieldElement acc = FieldElement::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    Polynomial r(field_);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(coeffs_[i] * FieldElement(field_, Integer(i)));
    r.trim();
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw DomainError("cannot normalize the zero polynomial");
    return *this * leading().inverse();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    check_same_field(rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<FieldElement> out(coeffs_.size() + rhs.coeffs_.size() - 1,
                                  FieldElement::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& s) {
    if (s.field() != field_) throw DomainError("scalar from a different field");
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (field_ != rhs.field_ || coeffs_.size() != rhs.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != rhs.coeffs_[i]) return false;
    return true;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        FieldElement c = coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !c.is_one()) {
            os << c.str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PolyDivMod poly_divmod(const Polynomial& n, const Polynomial& d) {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    const Field& f = n.field();
    if (f != d.field()) throw DomainError("polynomial field context mismatch");
    Polynomial q(f);
    Polynomial r = n;
    if (r.degree() < d.degree()) return {q, r};
    FieldElement inv_lead = d.leading().inverse();
    std::vector<FieldElement> qc(static_cast<std::size_t>(r.degree() - d.degree()) + 1,
                                 FieldElement::zero(f));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        FieldElement factor = r.leading() * inv_lead;
        qc[static_cast<std::size_t>(shift)] = factor;
        Polynomial sub = d * factor;
        Polynomial shifted = Polynomial::x_power(f, static_cast<std::size_t>(shift)) * sub;
        r -= shifted;
    }
    return {Polynomial(f, std::move(qc)), r};
}

Polynomial poly_mod(const Polynomial& n, const Polynomial& d) { return poly_divmod(n, d).remainder; }

Polynomial poly_exact_div(const Polynomial& n, const Polynomial& d) {
    auto [q, r] = poly_divmod(n, d);
    if (!r.is_zero()) throw InternalError("expected exact polynomial division");
    return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = poly_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

PolyXgcd poly_xgcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("xgcd(0, 0) is undefined");
    const Field& f = a.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(FieldElement::one(f)), s1(f);
    Polynomial t0(f), t1 = Polynomial::constant(FieldElement::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    FieldElement scale = r0.leading().inverse();
    return {r0 * scale, s0 * scale, t0 * scale};
}

Polynomial poly_inverse_mod(const Polynomial& a, const Polynomial& m) {
    auto x = poly_xgcd(a, m);
    if (!x.g.is_one()) throw DomainError("polynomial not invertible modulo " + m.str());
    return poly_mod(x.u, m);
}

Polynomial poly_crt(const Polynomial& b1, const Polynomial& m1, const Polynomial& b2,
                    const Polynomial& m2) {
    // b1 + m1 * ((b2 - b1) / m1 mod m2)
    Polynomial inv = poly_inverse_mod(poly_mod(m1, m2), m2);
    Polynomial t = poly_mod((b2 - b1) * inv, m2);
    return poly_mod(b1 + m1 * t, m1 * m2);
}

Polynomial poly_powmod(const Polynomial& base, const Integer& e, const Polynomial& m) {
    if (e < 0) throw DomainError("poly_powmod requires a nonnegative exponent");
    Polynomial acc = Polynomial::constant(FieldElement::one(base.field()));
    acc = poly_mod(acc, m);
    Polynomial b = poly_mod(base, m);
    Integer k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = poly_mod(acc * b, m);
        b = poly_mod(b * b, m);
        k >>= 1;
    }
    return acc;
}

namespace {

// E(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a
// (the classical resultant).
FieldElement resultant_classic(Polynomial a, Polynomial b) {
    const Field& f = a.field();
    FieldElement acc = FieldElement::one(f);
    for (;;) {
        if (a.degree() == 0) return acc * a.leading().pow(Integer(b.degree()));
        if (b.degree() >= a.degree()) {
            Polynomial r = poly_mod(b, a);
            if (r.is_zero()) return FieldElement::zero(f);
            acc *= a.leading().pow(Integer(b.degree() - r.degree()));
            b = std::move(r);
            continue;
        }
        if (b.is_zero()) return FieldElement::zero(f);
        if (b.degree() == 0) return acc * b.leading().pow(Integer(a.degree()));
        if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
        std::swap(a, b);
    }
}

}  // namespace

FieldElement poly_resultant(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("resultant of the zero polynomial");
    if (a.field() != b.field()) throw DomainError("polynomial field context mismatch");
    // Res(a, b) = lc(b)^deg(a) * prod a(beta) over roots beta of b.
    return resultant_classic(b, a);
}

Polynomial poly_interpolate(const Field& f,
                            const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    Polynomial acc(f);
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial num = Polynomial::constant(points[i].second);
        FieldElement den = FieldElement::one(f);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            Polynomial lin(f, {0, 1});
            lin -= Polynomial::constant(points[j].first);
            num *= lin;
            FieldElement d = points[i].first - points[j].first;
            if (d.is_zero()) throw DomainError("interpolation nodes must be distinct");
            den *= d;
        }
        acc += num * den.inverse();
    }
    return acc;
}

Polynomial poly_sqrt_lift(const Polynomial& s, const Polynomial& a, const Polynomial& b) {
    Polynomial a2 = a * a;
    Polynomial two_b = b * FieldElement(b.field(), 2);
    Polynomial inv = poly_inverse_mod(poly_mod(two_b, a2), a2);
    Polynomial num = poly_mod(b * b - s, a2);
    return poly_mod(b - num * inv, a2);
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> divs;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    return divs;
}

// Distinct roots of a squarefree monic polynomial that splits completely
// over F_p. Equal-degree splitting with a deterministic shift sweep.
void split_linear_fp(const Polynomial& l, std::vector<FieldElement>& out) {
    const Field& f = l.field();
    if (l.degree() <= 0) return;
    if (l.degree() == 1) {
        out.push_back(-l.coeff(0));
        return;
    }
    const Integer& p = f.modulus();
    Integer half = (p - 1) / 2;
    for (Integer shift = 0;; ++shift) {
        if (shift == p) throw InternalError("root splitting failed to converge");
        Polynomial base(f, {0, 1});
        base += Polynomial::constant(FieldElement(f, shift));
        Polynomial t = poly_powmod(base, half, l);
        t -= Polynomial::constant(FieldElement::one(f));
        if (t.is_zero()) continue;
        Polynomial g = poly_gcd(l, t);
        if (g.degree() == 0 || g.degree() == l.degree()) continue;
        split_linear_fp(g, out);
        split_linear_fp(poly_exact_div(l, g).monic(), out);
        return;
    }
}

std::vector<FieldElement> distinct_roots_fp(const Polynomial& a) {
    const Field& f = a.field();
    const Integer& p = f.modulus();
    Polynomial m = a.monic();
    // gcd(a, x^p - x) collects every root in F_p exactly once.
    Polynomial xp = poly_powmod(Polynomial(f, {0, 1}), p, m);
    xp -= Polynomial(f, {0, 1});
    std::vector<FieldElement> roots;
    Polynomial lin = xp.is_zero() ? m : poly_gcd(m, xp);
    split_linear_fp(lin, roots);
    return roots;
}

std::vector<FieldElement> distinct_roots_q(const Polynomial& a) {
    const Field& f = a.field();
    // Clear denominators to a primitive integer polynomial.
    Integer den_lcm = 1;
    for (const auto& c : a.coeffs()) {
        Integer d = mp::denominator(c.value());
        den_lcm = mp::lcm(den_lcm, d);
    }
    std::vector<Integer> ic;
    ic.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs())
        ic.push_back(mp::numerator(c.value()) * (den_lcm / mp::denominator(c.value())));
    std::vector<FieldElement> roots;
    // Strip x = 0 roots.
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.emplace_back(f, 0);
    if (low >= ic.size() - 1) return roots;
    Integer c0 = ic[low];
    Integer cn = ic.back();
    for (const Integer& u : positive_divisors(c0)) {
        for (const Integer& v : positive_divisors(cn)) {
            for (int sign : {1, -1}) {
                Rational cand(u * sign, v);
                FieldElement x(f, cand);
                if (a.eval(x).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), x) == roots.end())
                        roots.push_back(x);
                }
            }
        }
    }
    return roots;
}

}  // namespace

std::optional<std::vector<std::pair<FieldElement, int>>> poly_roots(const Polynomial& a) {
    if (a.is_zero()) throw DomainError("roots of the zero polynomial");
    const Field& f = a.field();
    if (a.degree() == 0) return std::vector<std::pair<FieldElement, int>>{};
    std::vector<FieldElement> distinct =
        f.is_prime_field() ? distinct_roots_fp(a) : distinct_roots_q(a);
    std::sort(distinct.begin(), distinct.end(),
              [](const FieldElement& x, const FieldElement& y) {
                  return FieldElement::compare(x, y) < 0;
              });
    std::vector<std::pair<FieldElement, int>> out;
    Polynomial rest = a.monic();
    for (const auto& r : distinct) {
        Polynomial lin(f, {0, 1});
        lin -= Polynomial::constant(r);
        int mult = 0;
        for (;;) {
            auto [q, rem] = poly_divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        if (mult > 0) out.emplace_back(r, mult);
    }
    if (rest.degree() > 0) return std::nullopt;  // some factor does not split
    return out;
}

std::optional<std::vector<FieldElement>> solve_kernel(
    const std::vector<std::vector<FieldElement>>& rows, const Field& f, std::size_t cols) {
    std::vector<std::vector<FieldElement>> m = rows;
    for (const auto& row : m)
        if (row.size() != cols) throw DomainError("ragged matrix row");
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        FieldElement inv = m[rank][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            FieldElement factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    // First free column gets 1, remaining free columns 0.
    std::size_t free_col = cols;
    for (std::size_t col = 0; col < cols; ++col) {
        if (pivot_of_col[col] < 0) {
            free_col = col;
            break;
        }
    }
    if (free_col == cols) return std::nullopt;
    std::vector<FieldElement> x(cols, FieldElement::zero(f));
    x[free_col] = FieldElement::one(f);
    for (std::size_t col = 0; col < cols; ++col) {
        int piv = pivot_of_col[col];
        if (piv < 0) continue;
        x[col] = -m[static_cast<std::size_t>(piv)][free_col];
    }
    return x;
}

}  // namespace hyperjac
