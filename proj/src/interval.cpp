#include "euclid/interval.hpp"

#include <algorithm>

namespace euclid {

RatInterval::RatInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_)
        throw domain_error("interval endpoints out of order");
}

RatInterval RatInterval::point(Rat v) {
    RatInterval r(v, v);
    return r;
}

int RatInterval::certified_sign() const {
    if (lo_.sign() > 0) return 1;
    if (hi_.sign() < 0) return -1;
    return 0;
}

RatInterval RatInterval::outward_rounded(unsigned bits) const {
    return {lo_.round_down_pow2(bits), hi_.round_up_pow2(bits)};
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo() + b.lo(), a.hi() + b.hi()};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo() - b.hi(), a.hi() - b.lo()};
}

RatInterval operator-(const RatInterval& a) {
    return {-a.hi(), -a.lo()};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo() * b.lo(), p2 = a.lo() * b.hi();
    Rat p3 = a.hi() * b.lo(), p4 = a.hi() * b.hi();
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RatInterval operator*(const Rat& a, const RatInterval& b) {
    if (a.sign() >= 0) return {a * b.lo(), a * b.hi()};
    return {a * b.hi(), a * b.lo()};
}

RatInterval operator+(const Rat& a, const RatInterval& b) {
    return {a + b.lo(), a + b.hi()};
}

RatInterval operator-(const Rat& a, const RatInterval& b) {
    return {a - b.hi(), a - b.lo()};
}

RatInterval operator-(const RatInterval& a, const Rat& b) {
    return {a.lo() - b, a.hi() - b};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.certified_sign() == 0)
        throw domain_error("division by interval containing zero");
    RatInterval inv(b.hi().reciprocal(), b.lo().reciprocal());
    return a * inv;
}

RatInterval intersect(const RatInterval& a, const RatInterval& b) {
    Rat lo = std::max(a.lo(), b.lo());
    Rat hi = std::min(a.hi(), b.hi());
    if (lo > hi)
        throw internal_error("disjoint enclosures of the same value");
    return {lo, hi};
}

bool overlap(const RatInterval& a, const RatInterval& b) {
    return std::max(a.lo(), b.lo()) <= std::min(a.hi(), b.hi());
}

RatInterval sqrt_enclosure(const Rat& x, const Rat& max_width) {
    if (x.sign() < 0)
        throw domain_error("square root of negative rational");
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");
    if (x.is_zero())
        return RatInterval::point(Rat(0));
    if (auto r = x.sqrt_exact())
        return RatInterval::point(*r);

    // sqrt(p/q) = sqrt(p*q * 4^k) / (q * 2^k); the integer square root floors
    // the numerator, so [s, s+1] over the denominator is an enclosure of
    // width 1/(q*2^k). Pick k so that width <= max_width.
    const Int p = x.numerator(), q = x.denominator();
    Int need = (max_width.denominator() + max_width.numerator() * q - 1)
               / (max_width.numerator() * q); // ceil(1 / (max_width * q))
    unsigned k = need > 1 ? ceil_log2(need) : 0;

    Int n = p * q;
    n <<= 2 * k;
    Int s = isqrt(n);
    Int den = q << k;
    // x is not a perfect square, so s^2 < n strictly and both bounds are strict.
    return {Rat(s, den), Rat(s + 1, den)};
}

RatInterval sqrt_enclosure(const RatInterval& x, const Rat& max_width) {
    if (x.lo().sign() < 0)
        throw domain_error("square root of interval extending below zero");
    return {sqrt_enclosure(x.lo(), max_width).lo(), sqrt_enclosure(x.hi(), max_width).hi()};
}

std::string to_string(const RatInterval& x) {
    return "[" + x.lo().str() + ", " + x.hi().str() + "]";
}

} // namespace euclid
