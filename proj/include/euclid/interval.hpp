#pragma once

#include <string>

#include "euclid/rat.hpp"

namespace euclid {

// Closed interval with exact rational endpoints, used as a certified
// enclosure of a real value. Operations obey the enclosure contract:
// x in X and y in Y imply f(x,y) in op(X, Y).
class RatInterval {
public:
    RatInterval(Rat lo, Rat hi);
    static RatInterval point(Rat v);

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RatInterval& x) const { return lo_ <= x.lo_ && x.hi_ <= hi_; }

    // Certified sign: +1 if the whole interval is positive, -1 if negative,
    // 0 if the interval contains zero (sign of the enclosed real undecided).
    int certified_sign() const;

    // Endpoints rounded outward to multiples of 2^-bits. Sound (the result
    // contains *this) and keeps endpoint sizes bounded during iteration.
    RatInterval outward_rounded(unsigned bits) const;

    friend bool operator==(const RatInterval& a, const RatInterval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    Rat lo_, hi_;
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const Rat& a, const RatInterval& b);
RatInterval operator+(const Rat& a, const RatInterval& b);
RatInterval operator-(const Rat& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const Rat& b);
RatInterval operator-(const RatInterval& a);

// Division; throws domain_error if b contains zero.
RatInterval operator/(const RatInterval& a, const RatInterval& b);

// Intersection of two enclosures of the same real. An empty intersection
// means one of them was wrong: internal_error, by contract.
RatInterval intersect(const RatInterval& a, const RatInterval& b);
bool overlap(const RatInterval& a, const RatInterval& b);

// Certified square root enclosure: returns [lo, hi] with lo >= 0,
// lo^2 <= x <= hi^2 and hi - lo <= max_width. Exact (degenerate) when x is
// a perfect rational square. Negative x is a domain error.
//
// Endpoints come from a Newton-type integer square root of the scaled
// numerator, rounded down for lo and up for hi; no floating point anywhere.
RatInterval sqrt_enclosure(const Rat& x, const Rat& max_width);

// Monotone extension to intervals: [sqrt(lo), sqrt(hi)] outward.
// Requires x.lo >= 0.
RatInterval sqrt_enclosure(const RatInterval& x, const Rat& max_width);

std::string to_string(const RatInterval& x);

} // namespace euclid
