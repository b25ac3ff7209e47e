#include "euclid/angle.hpp"

namespace euclid {

ProperAngle ProperAngle::from_invariant(Rat inv) {
    if (inv <= Rat(-1) || inv >= Rat(1))
        throw domain_error("angle invariant must lie strictly between -1 and 1");
    // The rational sine is a function of the class: it exists iff both
    // cos^2 = |inv| and sin^2 = 1 - |inv| are perfect rational squares.
    std::optional<Rat> sin;
    if (auto c = inv.abs().sqrt_exact()) {
        if (auto s = (Rat(1) - *c * *c).sqrt_exact())
            sin = *s;
    }
    return ProperAngle(std::move(inv), std::move(sin));
}

std::optional<Rat> ProperAngle::cos_exact() const {
    auto c = inv_.abs().sqrt_exact();
    if (!c) return std::nullopt;
    return inv_.sign() < 0 ? -*c : *c;
}

UnitCirclePoint::UnitCirclePoint(Rat c_, Rat s_) : c(std::move(c_)), s(std::move(s_)) {
    if (c * c + s * s != Rat(1))
        throw domain_error("point not on the unit circle");
}

UnitCirclePoint compose_rotations(const UnitCirclePoint& p, const UnitCirclePoint& q) {
    return {p.c * q.c - p.s * q.s, p.c * q.s + p.s * q.c};
}

UnitCirclePoint circle_point(const ProperAngle& a) {
    if (!a.rational_circle())
        throw domain_error("angle is not in the rational-circle subclass");
    return {*a.cos_exact(), *a.rational_sin()};
}

ProperAngle angle_from_circle_point(const UnitCirclePoint& p) {
    if (p.s.sign() <= 0)
        throw domain_error("proper angle requires positive sine");
    Rat inv = p.c * p.c;
    if (p.c.sign() < 0) inv = -inv;
    return ProperAngle::from_invariant(inv);
}

ProperAngle angle_from_points(const PointQ& a, const PointQ& b, const PointQ& c) {
    if (b == a || c == a)
        throw domain_error("angle legs must be distinct and non-opposite rays: leg point coincides with apex");
    Rat ux = b.x - a.x, uy = b.y - a.y;
    Rat vx = c.x - a.x, vy = c.y - a.y;
    Rat dot = ux * vx + uy * vy;
    Rat cross = ux * vy - uy * vx;
    if (cross.is_zero()) {
        throw domain_error(dot.sign() > 0
                               ? "angle legs must be distinct and non-opposite rays: rays coincide (zero angle)"
                               : "angle legs must be distinct and non-opposite rays: rays are opposite (straight angle)");
    }
    Rat nn = (ux * ux + uy * uy) * (vx * vx + vy * vy);
    Rat inv = dot * dot / nn;
    if (dot.sign() < 0) inv = -inv;
    return ProperAngle::from_invariant(inv);
}

bool congruent(const ProperAngle& a, const ProperAngle& b) {
    return a.invariant() == b.invariant();
}

std::strong_ordering compare_angles(const ProperAngle& a, const ProperAngle& b) {
    // The invariant decreases as the angle widens.
    return b.invariant() <=> a.invariant();
}

ProperAngle supplement(const ProperAngle& a) {
    return ProperAngle::from_invariant(-a.invariant());
}

bool addable(const ProperAngle& a, const ProperAngle& b) {
    // a < supplement(b), i.e. inv(a) > -inv(b), symmetric in both arguments.
    return (a.invariant() + b.invariant()).sign() > 0;
}

GeneralizedAngle::GeneralizedAngle(Int half_turns, std::optional<ProperAngle> residual)
    : turns_(std::move(half_turns)), residual_(std::move(residual)) {
    if (turns_ < 0)
        throw domain_error("half-turn count must be non-negative");
}

std::strong_ordering compare_generalized(const GeneralizedAngle& a, const GeneralizedAngle& b) {
    if (a.half_turns() < b.half_turns()) return std::strong_ordering::less;
    if (a.half_turns() > b.half_turns()) return std::strong_ordering::greater;
    const bool az = !a.residual(), bz = !b.residual();
    if (az && bz) return std::strong_ordering::equal;
    if (az) return std::strong_ordering::less;
    if (bz) return std::strong_ordering::greater;
    return compare_angles(*a.residual(), *b.residual());
}

AngleQ::AngleQ(PointQ apex, PointQ b, PointQ c)
    : leg1_(apex, std::move(b)), leg2_(apex, std::move(c)) {
    // Same validity condition as the congruence-class constructor.
    (void)angle_from_points(leg1_.origin, leg1_.through, leg2_.through);
}

PointRegion locate_in_angle(const PointQ& p, const AngleQ& angle) {
    if (on_ray(p, angle.leg1()) || on_ray(p, angle.leg2()))
        return PointRegion::boundary;
    int s1 = side_of_line(p, angle.apex(), angle.leg1().through);
    int c1 = side_of_line(angle.leg2().through, angle.apex(), angle.leg1().through);
    int s2 = side_of_line(p, angle.apex(), angle.leg2().through);
    int c2 = side_of_line(angle.leg1().through, angle.apex(), angle.leg2().through);
    return (s1 == c1 && s2 == c2) ? PointRegion::inside : PointRegion::outside;
}

} // namespace euclid
