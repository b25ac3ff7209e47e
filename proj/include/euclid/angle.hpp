#pragma once

#include <optional>
#include <variant>

#include "euclid/interval.hpp"
#include "euclid/plane.hpp"

namespace euclid {

// Refinement budget, in bits of working precision, for the adaptive
// enclosure loops. Overridable per call; the CLI maps EUCLID_PRECISION_CAP
// onto this.
inline constexpr unsigned kDefaultPrecisionBits = 1u << 16;

// Congruence class of a proper angle (strictly between the zero and the
// straight angle), represented by the complete invariant
//
//     inv = sign(cos a) * cos^2 a,
//
// a rational number in (-1, 1) for angles between rational rays. The map is
// strictly decreasing in the angle, so equality of invariants is congruence
// and invariant order is reverse angle order.
//
// When both cos and sin are rational (the "rational circle" subclass, closed
// under exact addition) the positive rational sine is carried alongside.
class ProperAngle {
public:
    static ProperAngle from_invariant(Rat inv);

    const Rat& invariant() const { return inv_; }
    const std::optional<Rat>& rational_sin() const { return sin_; }
    bool rational_circle() const { return sin_.has_value(); }

    // Exact cosine when |inv| is a perfect square, nullopt otherwise.
    std::optional<Rat> cos_exact() const;

    friend bool operator==(const ProperAngle& a, const ProperAngle& b) {
        return a.inv_ == b.inv_;
    }

private:
    ProperAngle(Rat inv, std::optional<Rat> sin) : inv_(std::move(inv)), sin_(std::move(sin)) {}
    Rat inv_;
    std::optional<Rat> sin_;
};

// Exact point on the rational unit circle, c^2 + s^2 = 1.
struct UnitCirclePoint {
    UnitCirclePoint(Rat c_, Rat s_);
    Rat c;
    Rat s;
};

// Rotation group law: angles add. Both inputs must lie on the unit circle.
UnitCirclePoint compose_rotations(const UnitCirclePoint& p, const UnitCirclePoint& q);

// (cos, sin) of a rational-circle angle, sin > 0; domain error otherwise.
UnitCirclePoint circle_point(const ProperAngle& a);

// Inverse of circle_point; requires s > 0 (a proper angle's sine).
ProperAngle angle_from_circle_point(const UnitCirclePoint& p);

// Congruence class of the angle at apex A with legs through B and C.
// Throws domain_error unless the rays AB, AC are distinct and non-opposite.
ProperAngle angle_from_points(const PointQ& a, const PointQ& b, const PointQ& c);

// Exact congruence test; no tolerance anywhere.
bool congruent(const ProperAngle& a, const ProperAngle& b);

// Total order by angle size (greater = wider angle).
std::strong_ordering compare_angles(const ProperAngle& a, const ProperAngle& b);

// The supplement: cos flips sign, sin is unchanged. An involution.
ProperAngle supplement(const ProperAngle& a);

// Two proper angles can be added (sum still proper) iff each is smaller
// than the supplement of the other.
bool addable(const ProperAngle& a, const ProperAngle& b);

// Formal sum a*halfturn + residual: the bookkeeping needed to add angles of
// arbitrary magnitude. Canonical: a residual never equals a half turn.
class GeneralizedAngle {
public:
    GeneralizedAngle(Int half_turns, std::optional<ProperAngle> residual);
    static GeneralizedAngle zero() { return {0, std::nullopt}; }
    static GeneralizedAngle half_turn() { return {1, std::nullopt}; }
    static GeneralizedAngle proper(ProperAngle a) { return {0, std::move(a)}; }

    const Int& half_turns() const { return turns_; }
    const std::optional<ProperAngle>& residual() const { return residual_; }

private:
    Int turns_;
    std::optional<ProperAngle> residual_;
};

// Lexicographic in (half_turns, residual size); the zero residual sorts
// below every proper residual.
std::strong_ordering compare_generalized(const GeneralizedAngle& a, const GeneralizedAngle& b);

// Sum whose residual class is not representable exactly: the half-turn
// carry is decided, but the residual is known only through a certified
// enclosure of its measure in half turns (a subinterval of (0,1)).
struct EnclosedAngle {
    Int half_turns;
    RatInterval residual_halfturn;
};

// Generalized-angle addition. Exact whenever both residuals are
// rational-circle angles (or zero): compose the rotations and read the
// half-turn carry off the sign of the resulting sine. Otherwise the sum
// degrades explicitly to an EnclosedAngle whose residual enclosure has
// width <= max_width; the carry is refined until the sum separates from the
// half-turn boundary (the exact boundary case is detected upfront via the
// supplement identity, so refinement terminates or hits the precision cap).
std::variant<GeneralizedAngle, EnclosedAngle>
add_generalized(const GeneralizedAngle& g, const GeneralizedAngle& h, const Rat& max_width,
                unsigned max_precision_bits = kDefaultPrecisionBits);

// Concrete angle as a pair of rays for point-location queries.
class AngleQ {
public:
    AngleQ(PointQ apex, PointQ b, PointQ c);
    const PointQ& apex() const { return leg1_.origin; }
    const RayQ& leg1() const { return leg1_; }
    const RayQ& leg2() const { return leg2_; }

private:
    RayQ leg1_;
    RayQ leg2_;
};

enum class PointRegion { inside, outside, boundary };

// Exact two-sided test: inside means on the C-side of line(A,B) and on the
// B-side of line(A,C). Points on either leg ray report boundary.
PointRegion locate_in_angle(const PointQ& p, const AngleQ& angle);

} // namespace euclid
