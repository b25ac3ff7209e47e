#pragma once

#include "euclid/interval.hpp"
#include "euclid/rat.hpp"

namespace euclid {

// The concrete model is the rational Cartesian plane. All predicates here
// are exact sign computations; nothing in this header approximates.

struct PointQ {
    Rat x;
    Rat y;
    friend bool operator==(const PointQ&, const PointQ&) = default;
};

// Non-degenerate segment: endpoints must differ.
struct SegmentQ {
    SegmentQ(PointQ a_, PointQ b_);
    PointQ a;
    PointQ b;
};

// Ray from `origin` through `through`; the two points must differ.
struct RayQ {
    RayQ(PointQ origin_, PointQ through_);
    PointQ origin;
    PointQ through;
};

// Squared Euclidean length. Lengths themselves are typically irrational in
// the rational plane, so congruence classes are carried squared: two
// segments are congruent iff their SqLength values are equal.
class SqLength {
public:
    explicit SqLength(Rat value);
    const Rat& value() const { return v_; }
    friend bool operator==(const SqLength&, const SqLength&) = default;
    friend std::strong_ordering operator<=>(const SqLength& a, const SqLength& b) {
        return a.v_ <=> b.v_;
    }

private:
    Rat v_;
};

// Sign of the orientation determinant of (b - a, c - a):
// +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const PointQ& a, const PointQ& b, const PointQ& c);

bool collinear(const PointQ& a, const PointQ& b, const PointQ& c);

// True iff a, b, c are distinct, collinear, and b lies strictly between
// a and c. Returns false (never throws) for coincident or non-collinear input.
bool betweenness(const PointQ& a, const PointQ& b, const PointQ& c);

// Which side of the directed line through (a, b) does p lie on?
// +1 left (counterclockwise), -1 right, 0 on the line. a == b is a domain error.
int side_of_line(const PointQ& p, const PointQ& a, const PointQ& b);

// p lies on the ray (origin included).
bool on_ray(const PointQ& p, const RayQ& ray);

SqLength sq_length(const SegmentQ& s);

// Exact intersection point of lines (a,b) and (c,d); nullopt when parallel
// (including coincident lines). Endpoint pairs must be distinct points.
std::optional<PointQ> line_intersection(const PointQ& a, const PointQ& b,
                                        const PointQ& c, const PointQ& d);

// Certified enclosure of the length ratio sqrt(x/y), of width <= max_width.
//
// The search walks the Stern-Brocot tree with continued-fraction run
// acceleration; each branch is decided by the exact comparison
// a^2 * y <= b^2 * x, i.e. "a copies of the unit do not exceed b copies of
// the target". Exact degenerate interval when x/y is a perfect square.
// `max_steps` caps the number of descents; exceeding it is a precision error.
RatInterval length_ratio(const SqLength& x, const SqLength& y, const Rat& max_width,
                         unsigned max_steps = 100000);

// Enclosure of the squared length of the concatenation of two segments of
// squared lengths x and y: (sqrt(x) + sqrt(y))^2 = x + y + 2*sqrt(x*y).
// Exact when x*y is a perfect square.
RatInterval add_lengths(const SqLength& x, const SqLength& y, const Rat& max_width);

} // namespace euclid
