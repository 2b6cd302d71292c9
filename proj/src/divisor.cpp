#include "hyperjac/divisor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hyperjac {

bool is_valid_mumford(const HyperellipticCurve& curve, const Polynomial& a, const Polynomial& b) {
    if (a.field() != curve.field() || b.field() != curve.field()) return false;
    if (a.is_zero() || !a.is_monic()) return false;
    if (a.degree() > curve.genus()) return false;
    if (b.degree() >= a.degree()) return false;
    Polynomial check = b * b - curve.rhs();
    return poly_mod(check, a).is_zero();
}

MumfordDivisor::MumfordDivisor(CurveRef curve, Polynomial a, Polynomial b)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)) {
    if (!curve_) throw DomainError("divisor requires a curve");
    if (!is_valid_mumford(*curve_, a_, b_))
        throw InvalidDivisor("not a reduced Mumford pair on " + curve_->str() + ": (" + a_.str() +
                             ", " + b_.str() + ")");
}

MumfordDivisor MumfordDivisor::identity(CurveRef curve) {
    const Field& f = curve->field();
    return MumfordDivisor(std::move(curve), Polynomial(f, {1}), Polynomial(f));
}

MumfordDivisor MumfordDivisor::negate() const {
    return MumfordDivisor(curve_, a_, poly_mod(-b_, a_));
}

std::optional<std::array<FieldElement, 4>> MumfordDivisor::chart_coords() const {
    if (curve_->genus() != 2 || a_.degree() != 2) return std::nullopt;
    return std::array<FieldElement, 4>{a_.coeff(1), a_.coeff(0), b_.coeff(1), b_.coeff(0)};
}

bool MumfordDivisor::operator==(const MumfordDivisor& rhs) const {
    return same_curve(curve_, rhs.curve_) && a_ == rhs.a_ && b_ == rhs.b_;
}

std::string MumfordDivisor::str() const {
    return "(" + a_.str() + ", " + b_.str() + ")";
}

PointDivisor::PointDivisor(CurveRef curve, std::vector<CurvePoint> points)
    : curve_(std::move(curve)), points_(std::move(points)) {
    if (!curve_) throw DomainError("divisor requires a curve");
    if (points_.size() > static_cast<std::size_t>(curve_->genus()))
        throw InvalidDivisor("more than g points in a reduced divisor");
    for (const auto& p : points_) {
        if (p.is_infinity()) throw InvalidDivisor("point divisors hold affine points only");
        if (!on_curve(*curve_, p)) throw InvalidDivisor("point " + p.str() + " is not on the curve");
    }
    std::sort(points_.begin(), points_.end(), [](const CurvePoint& l, const CurvePoint& r) {
        int c = FieldElement::compare(l.x(), r.x());
        if (c != 0) return c < 0;
        return FieldElement::compare(l.y(), r.y()) < 0;
    });
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        const auto& p = points_[i];
        const auto& q = points_[i + 1];
        if (p.x() != q.x()) continue;
        if (p.y() != q.y()) throw InvalidDivisor("conjugate pair " + p.str() + ", " + q.str());
        if (p.y().is_zero())
            throw InvalidDivisor("point with y = 0 repeated: " + p.str());
    }
}

bool PointDivisor::operator==(const PointDivisor& rhs) const {
    return same_curve(curve_, rhs.curve_) && points_ == rhs.points_;
}

std::string PointDivisor::str() const {
    if (points_.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) os << ", ";
        os << points_[i].str();
    }
    os << "}";
    return os.str();
}

MumfordDivisor mumford_from_points(const PointDivisor& d) {
    const CurveRef& curve = d.curve();
    const Field& f = curve->field();
    if (d.points().empty()) return MumfordDivisor::identity(curve);

    // Group by x-coordinate; points are sorted, equal points adjacent.
    struct Branch {
        FieldElement x;
        FieldElement y;
        int mult;
    };
    std::vector<Branch> branches;
    for (const auto& p : d.points()) {
        if (!branches.empty() && branches.back().x == p.x())
            ++branches.back().mult;
        else
            branches.push_back({p.x(), p.y(), 1});
    }

    Polynomial a = Polynomial::constant(FieldElement::one(f));
    std::optional<Polynomial> b;
    std::optional<Polynomial> b_mod;
    for (const auto& br : branches) {
        Polynomial lin(f, {0, 1});
        lin -= Polynomial::constant(br.x);
        Polynomial a_local = lin;
        // Branch data: start with the value and Newton-lift to contact order m.
        Polynomial b_local = Polynomial::constant(br.y);
        while (a_local.degree() < br.mult) {
            b_local = poly_sqrt_lift(curve->rhs(), a_local, b_local);
            a_local *= a_local;
        }
        Polynomial a_target = Polynomial::constant(FieldElement::one(f));
        for (int i = 0; i < br.mult; ++i) a_target *= lin;
        b_local = poly_mod(b_local, a_target);
        if (!b) {
            b = b_local;
            b_mod = a_target;
        } else {
            b = poly_crt(*b, *b_mod, b_local, a_target);
            b_mod = *b_mod * a_target;
        }
        a *= a_target;
    }
    return MumfordDivisor(curve, a, poly_mod(*b, a));
}

std::optional<PointDivisor> points_from_mumford(const MumfordDivisor& m) {
    if (m.is_identity()) return PointDivisor(m.curve(), {});
    auto roots = poly_roots(m.a_poly());
    if (!roots) return std::nullopt;
    std::vector<CurvePoint> pts;
    for (const auto& [x, mult] : *roots) {
        FieldElement y = m.b_poly().eval(x);
        for (int i = 0; i < mult; ++i) pts.push_back(CurvePoint::affine(x, y));
    }
    return PointDivisor(m.curve(), std::move(pts));
}

}  // namespace hyperjac
