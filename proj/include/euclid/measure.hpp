#pragma once

#include "euclid/angle.hpp"
#include "euclid/interval.hpp"
#include "euclid/plane.hpp"

namespace euclid {

enum class AngleUnit { radian, degree, halfturn };

// Certified two-sided bounds on pi from Archimedes' polygon doubling,
// starting at the hexagon: the inscribed 6*2^k-gon (chord recurrence, chord
// of the hexagon = radius) bounds from below, the circumscribed polygon
// (tangent-length recurrence, hexagon half-side = r/sqrt(3)) from above.
// Every step runs in outward-rounded interval arithmetic.
struct PiEnclosure {
    unsigned doublings; // polygon has 6 * 2^doublings sides
    RatInterval bounds;
};

PiEnclosure pi_enclosure(unsigned doublings);

// Smallest doubling count whose enclosure width is <= max_width.
PiEnclosure pi_enclosure_for_width(const Rat& max_width, unsigned max_doublings = 64);

// Certified enclosure of the angular measure of an angle, stored exactly in
// half turns (the measure divided by pi). A radian view multiplies by a pi
// enclosure of the recorded refinement; a degree view is exact scaling by
// 180. A geometric angle and its measure stay distinct types throughout:
// angles are congruence classes, measures are (enclosed) numbers.
class MeasureEnclosure {
public:
    MeasureEnclosure(RatInterval halfturn_fraction, unsigned pi_doublings);

    const RatInterval& halfturn_fraction() const { return fraction_; }
    unsigned pi_doublings() const { return pi_doublings_; }
    bool exact() const { return fraction_.is_point(); }

    RatInterval in_unit(AngleUnit unit) const;

private:
    RatInterval fraction_;
    unsigned pi_doublings_;
};

RatInterval convert(const MeasureEnclosure& m, AngleUnit unit);

// Enclosure of the cosine of the class: exact when |inv| is a perfect
// square, otherwise sign(inv) * sqrt-enclosure of |inv|.
RatInterval cos_enclosure(const ProperAngle& a, const Rat& max_width);

// Chord ratio sigma = |BC| / |AB| of the isosceles configuration with apex
// angle a, i.e. sqrt(2 - 2 cos a). Strictly increasing in the angle but
// only subadditive; the additive measure is angular_measure below.
RatInterval chord_ratio(const ProperAngle& a, const Rat& max_width);

// The additive angular measure, as a certified enclosure of measure/pi.
//
// Computed by binary digit extraction: cos(2a) = 2|inv| - 1 is exactly
// rational for every proper angle, and each further doubling
// c <- 2c^2 - 1 emits one binary digit of measure/pi through the certified
// sign chain of sin(2^k a) = sin(a) * prod 2 cos(2^j a). Digits terminate
// exactly iff inv is 0 or +-1/2 (the quarter-, eighth-turn classes); all
// other classes always separate from zero at finite precision, so the
// adaptive loop only fails at the precision cap.
//
// The returned enclosure is tight enough that the radian view also has
// width <= max_width.
MeasureEnclosure angular_measure(const ProperAngle& a, const Rat& max_width,
                                 unsigned max_precision_bits = kDefaultPrecisionBits);

// Measure of a generalized angle: the residual's measure shifted by the
// exact half-turn count. The straight angle (1, zero) measures exactly
// [1, 1] half turns, i.e. pi radians.
MeasureEnclosure angular_measure(const GeneralizedAngle& g, const Rat& max_width,
                                 unsigned max_precision_bits = kDefaultPrecisionBits);

// Lower-bound route following the broken-line definition of arc length:
// the half-angle recurrence splits the angle into 2^k equal parts and sums
// the 2^k equal chords. The lower endpoint is a certified lower bound for
// the radian measure, non-decreasing in k.
RatInterval chord_sum_lower_bound(const ProperAngle& a, unsigned bisections);

// Enclosure of the arc length subtended by the angle at radius
// r = sqrt(r_sq): measure_in_radians * r.
RatInterval arc_length(const ProperAngle& a, const SqLength& r_sq, const Rat& max_width);
RatInterval arc_length(const FractionAngle& a, const SqLength& r_sq, const Rat& max_width);

// Certified check of the universal bound: the measure of every proper angle
// is below 4 (the semicircle's circumscribing rectangle argument).
bool envelope_check(const ProperAngle& a);

// Angle class given directly by an exact rational fraction of the half
// turn; this admits classes such as the degree (1/180) that are not
// rational-circle angles. Its measure is exact by construction; its cosine
// is recovered on demand by inverting the digit-doubling map.
struct FractionAngle {
    Rat fraction; // measure / pi, in (0, 1)
};

FractionAngle from_halfturn_fraction(const Rat& fraction);

MeasureEnclosure angular_measure(const FractionAngle& a, const Rat& max_width);

// Cosine of a fraction angle via bisection on the cosine: candidate
// rational cosines are ordered against the target fraction by comparing
// their digit-doubling measure streams, an exact comparison term by term.
RatInterval cos_enclosure(const FractionAngle& a, const Rat& max_width,
                          unsigned max_precision_bits = kDefaultPrecisionBits);

RatInterval chord_ratio(const FractionAngle& a, const Rat& max_width,
                        unsigned max_precision_bits = kDefaultPrecisionBits);

} // namespace euclid
