#include "euclid/measure.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

namespace euclid {

namespace {

const Rat kOne(1);
const Rat kTwo(2);
const Rat kHalf(1, 2);

RatInterval clamp_to(const RatInterval& x, const Rat& lo, const Rat& hi) {
    return intersect(x, RatInterval(lo, hi));
}

// Smallest m >= 1 with 2^-m <= w.
unsigned digits_for_width(const Rat& w) {
    if (w.sign() <= 0)
        throw domain_error("max_width must be positive");
    if (w >= kHalf) return 1;
    Int need = (w.reciprocal()).ceil();
    return std::max(1u, ceil_log2(need));
}

RatInterval compute_pi_bounds(unsigned doublings) {
    const unsigned p = 2 * doublings + 64;
    const Rat tol = pow2(-static_cast<int>(p));

    // Unit circle. s = inscribed side, t = circumscribed half-side.
    RatInterval s = RatInterval::point(kOne);
    RatInterval t = sqrt_enclosure(Rat(1, 3), tol);
    for (unsigned i = 0; i < doublings; ++i) {
        // s' = s / sqrt(2 + sqrt(4 - s^2)): the cancellation-free form of
        // the chord half-angle step sqrt(2 - sqrt(4 - s^2)).
        RatInterval inner = sqrt_enclosure((Rat(4) + (-(s * s))).outward_rounded(p), tol);
        s = s / sqrt_enclosure((kTwo + inner).outward_rounded(p), tol);
        // t' = t / (1 + sqrt(1 + t^2)): tangent half-angle step.
        t = t / (kOne + sqrt_enclosure((kOne + t * t).outward_rounded(p), tol));
        s = clamp_to(s.outward_rounded(p), Rat(0), kOne);
        t = clamp_to(t.outward_rounded(p), Rat(0), kOne);
    }
    Rat half_sides(Int(3) << doublings); // n/2 for the 6*2^k-gon
    RatInterval inscribed = half_sides * s;        // half-perimeter, below pi
    RatInterval circumscribed = (kTwo * half_sides) * t; // half-perimeter, above pi
    return {inscribed.lo(), circumscribed.hi()};
}

// The enclosures are deterministic in k and requested constantly by the
// measure conversions; memoize them. The cache is invisible to callers.
RatInterval cached_pi_bounds(unsigned doublings) {
    static std::mutex mutex;
    static std::map<unsigned, RatInterval> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(doublings);
    if (it == cache.end())
        it = cache.emplace(doublings, compute_pi_bounds(doublings)).first;
    return it->second;
}

} // namespace

PiEnclosure pi_enclosure(unsigned doublings) {
    return {doublings, cached_pi_bounds(doublings)};
}

PiEnclosure pi_enclosure_for_width(const Rat& max_width, unsigned max_doublings) {
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");
    // Width shrinks like 4^-k; start a little below the expected k and walk
    // up to the least sufficient order.
    unsigned k = 0;
    if (max_width < Rat(3)) {
        Int need = (Rat(3) / max_width).ceil();
        unsigned estimate = (ceil_log2(need) + 1) / 2;
        k = estimate > 3 ? estimate - 3 : 0;
    }
    for (; k <= max_doublings; ++k) {
        PiEnclosure e = pi_enclosure(k);
        if (e.bounds.width() <= max_width) return e;
    }
    throw precision_error("pi enclosure width not reached within doubling cap");
}

MeasureEnclosure::MeasureEnclosure(RatInterval halfturn_fraction, unsigned pi_doublings)
    : fraction_(std::move(halfturn_fraction)), pi_doublings_(pi_doublings) {
    if (fraction_.lo().sign() < 0)
        throw domain_error("half-turn fraction cannot be negative");
}

RatInterval MeasureEnclosure::in_unit(AngleUnit unit) const {
    switch (unit) {
    case AngleUnit::halfturn:
        return fraction_;
    case AngleUnit::degree:
        return Rat(180) * fraction_;
    case AngleUnit::radian:
        return fraction_ * pi_enclosure(pi_doublings_).bounds;
    }
    throw domain_error("unknown angle unit");
}

RatInterval convert(const MeasureEnclosure& m, AngleUnit unit) {
    return m.in_unit(unit);
}

RatInterval cos_enclosure(const ProperAngle& a, const Rat& max_width) {
    if (auto c = a.cos_exact())
        return RatInterval::point(*c);
    RatInterval root = sqrt_enclosure(a.invariant().abs(), max_width);
    return a.invariant().sign() < 0 ? -root : root;
}

namespace {

// Binary digits of x = measure/pi in (0,1), extracted from the sign chain
// of sin(2^k a). Inputs are sign(cos a) and the exact rational cos^2 a.
//
// If `exact` is set the stream terminated: x equals digits + 2^-(n+1)
// exactly (the next doubling landed on the straight angle). Otherwise
// x lies strictly between digits and digits + 2^-n.
struct DigitResult {
    std::vector<bool> digits;
    bool exact = false;
};

DigitResult measure_digits(int sign_cos, const Rat& cos_sq, unsigned count,
                           unsigned max_precision_bits) {
    DigitResult out;
    if (sign_cos == 0) {
        out.exact = true; // x = 1/2
        return out;
    }
    int tau = sign_cos; // sign of sin(2a)
    out.digits.push_back(tau < 0);
    const Rat c1 = kTwo * cos_sq - kOne; // cos(2a), exactly rational
    if (c1.is_zero() || out.digits.size() >= count) {
        out.exact = c1.is_zero(); // x = b1/2 + 1/4
        return out;
    }

    // cos(2^k a) is rational but its exact size doubles per step; an
    // outward-rounded enclosure keeps the cost linear. Its sign is what the
    // digits need, and the true value is provably nonzero for k >= 2 (a
    // rational cosine never squares to 1/2), so retrying at higher
    // precision always resolves short of the cap.
    //
    // The enclosure runs in fixed point: [lo, hi] / 2^p with lo rounded
    // down and hi rounded up at every step, so only integer multiplies and
    // shifts occur in the loop.
    for (unsigned p = std::max(64u, 2 * count + 64);; p *= 2) {
        if (p > max_precision_bits)
            throw precision_error("angular measure digit undecidable at precision cap");
        const Int one = Int(1) << p;
        Int lo = (c1 * Rat(one)).floor();
        Int hi = -((-c1 * Rat(one)).floor()); // ceil
        std::vector<bool> digits{out.digits.front()};
        int t = tau;
        bool ok = true;
        while (digits.size() < count) {
            int g = lo.sign() > 0 ? 1 : (hi.sign() < 0 ? -1 : 0);
            if (g == 0) {
                ok = false;
                break;
            }
            t *= g;
            digits.push_back(t < 0);
            // interval square (non-negative scale 2^2p), then 2x - 1
            Int a2 = lo * lo, b2 = hi * hi;
            Int s_lo, s_hi;
            if (lo.sign() >= 0) {
                s_lo = a2;
                s_hi = b2;
            } else if (hi.sign() <= 0) {
                s_lo = b2;
                s_hi = a2;
            } else {
                s_lo = 0;
                s_hi = std::max(a2, b2);
            }
            s_lo <<= 1;
            s_hi <<= 1;
            lo = (s_lo >> p) - one;                 // floor: s_lo >= 0
            hi = ((s_hi + one - 1) >> p) - one;     // ceil
            if (lo < -one) lo = -one;
            if (hi > one) hi = one;
        }
        if (ok) {
            out.digits = std::move(digits);
            return out;
        }
    }
}

Rat digits_value(const std::vector<bool>& digits) {
    Int num = 0;
    for (bool b : digits) {
        num <<= 1;
        if (b) num |= 1;
    }
    return Rat(num, Int(1) << digits.size());
}

RatInterval fraction_interval(const DigitResult& d) {
    Rat base = digits_value(d.digits);
    if (d.exact)
        return RatInterval::point(base + pow2(-static_cast<int>(d.digits.size()) - 1));
    return {base, base + pow2(-static_cast<int>(d.digits.size()))};
}

unsigned pi_doublings_for(const Rat& width_target) {
    return pi_enclosure_for_width(width_target).doublings;
}

} // namespace

MeasureEnclosure angular_measure(const ProperAngle& a, const Rat& max_width,
                                 unsigned max_precision_bits) {
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");
    // Split the budget so the radian view also meets max_width:
    // width(q * pi) <= width(q) * 4 + 1 * width(pi) for q in (0,1).
    unsigned m = digits_for_width(max_width / Rat(8));
    DigitResult d = measure_digits(a.invariant().sign(), a.invariant().abs(), m,
                                   max_precision_bits);
    return {fraction_interval(d), pi_doublings_for(max_width / Rat(4))};
}

MeasureEnclosure angular_measure(const GeneralizedAngle& g, const Rat& max_width,
                                 unsigned max_precision_bits) {
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");
    Rat shift(g.half_turns());
    RatInterval fraction = RatInterval::point(shift);
    if (g.residual()) {
        unsigned m = digits_for_width(max_width / Rat(8));
        DigitResult d = measure_digits(g.residual()->invariant().sign(),
                                       g.residual()->invariant().abs(), m, max_precision_bits);
        fraction = shift + fraction_interval(d);
    }
    // The radian scale error grows with the magnitude; shrink pi's width
    // in proportion.
    Rat magnitude = std::max(kOne, fraction.hi());
    return {fraction, pi_doublings_for(max_width / (Rat(4) * magnitude))};
}

RatInterval chord_ratio(const ProperAngle& a, const Rat& max_width) {
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");
    // sigma = sqrt(2 - 2 cos a). Near the zero angle the square root
    // steepens, so refine the cosine until the result width fits.
    Rat wc = max_width * max_width / Rat(32);
    if (max_width / Rat(8) < wc) wc = max_width / Rat(8);
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatInterval c = cos_enclosure(a, wc);
        RatInterval sq = clamp_to(kTwo - (kTwo * c), Rat(0), Rat(4));
        RatInterval sigma = sqrt_enclosure(sq, wc);
        if (sigma.width() <= max_width) return sigma;
        wc = wc / Rat(16);
    }
    throw precision_error("chord ratio width not reached");
}

RatInterval chord_sum_lower_bound(const ProperAngle& a, unsigned bisections) {
    const unsigned p = 2 * bisections + 64;
    const Rat tol = pow2(-static_cast<int>(p));
    RatInterval c = cos_enclosure(a, tol);
    for (unsigned i = 0; i < bisections; ++i) {
        // cos(a/2) = sqrt((1 + cos a) / 2); halves of proper angles are
        // acute, so the positive root is the right one.
        RatInterval half = clamp_to(kHalf * (kOne + c), Rat(0), kOne);
        c = clamp_to(sqrt_enclosure(half, tol).outward_rounded(p), Rat(0), kOne);
    }
    RatInterval chord = sqrt_enclosure(clamp_to(kTwo - (kTwo * c), Rat(0), Rat(4)), tol);
    return Rat(Int(1) << bisections) * chord;
}

RatInterval arc_length(const ProperAngle& a, const SqLength& r_sq, const Rat& max_width) {
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");
    RatInterval coarse_r = sqrt_enclosure(r_sq.value(), kOne);
    Rat r_cap = coarse_r.hi();
    // width(theta * r) <= width(theta) * r + theta * width(r), theta < 4.
    RatInterval theta = angular_measure(a, max_width / (Rat(4) * r_cap)).in_unit(AngleUnit::radian);
    RatInterval radius = sqrt_enclosure(r_sq.value(), max_width / Rat(16));
    return theta * radius;
}

bool envelope_check(const ProperAngle& a) {
    MeasureEnclosure m = angular_measure(a, Rat(1, 1024));
    return m.in_unit(AngleUnit::radian).hi() < Rat(4);
}

FractionAngle from_halfturn_fraction(const Rat& fraction) {
    if (fraction.sign() <= 0 || fraction >= kOne)
        throw domain_error("half-turn fraction of a proper angle must lie in (0, 1)");
    return {fraction};
}

MeasureEnclosure angular_measure(const FractionAngle& a, const Rat& max_width) {
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");
    return {RatInterval::point(a.fraction), pi_doublings_for(max_width / Rat(2))};
}

namespace {

// Order of the measure of the angle with rational cosine c against the
// rational fraction q, decided by comparing binary digit streams. Callers
// must rule out equality beforehand (possible only for c in {0, ±1/2} by
// the rationality of both sides).
std::strong_ordering compare_measure_to_fraction(const Rat& c, const Rat& q,
                                                 unsigned max_precision_bits) {
    if (c.is_zero())
        return kHalf <=> q;
    for (unsigned m = 32;; m *= 2) {
        if (m > max_precision_bits)
            throw precision_error("measure comparison undecided at precision cap");
        DigitResult d = measure_digits(c.sign(), c * c, m, max_precision_bits);
        RatInterval x = fraction_interval(d);
        if (x.hi() < q) return std::strong_ordering::less;
        if (x.lo() > q) return std::strong_ordering::greater;
        if (d.exact) return x.lo() <=> q;
    }
}

} // namespace

RatInterval cos_enclosure(const FractionAngle& a, const Rat& max_width,
                          unsigned max_precision_bits) {
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");
    const Rat& q = a.fraction;
    // The classes where both the fraction and the cosine are rational.
    if (q == Rat(1, 2)) return RatInterval::point(Rat(0));
    if (q == Rat(1, 3)) return RatInterval::point(kHalf);
    if (q == Rat(2, 3)) return RatInterval::point(Rat(-1, 2));

    // Bisection on the cosine; the measure is strictly decreasing in it.
    Rat lo(-1), hi(1);
    while (hi - lo > max_width) {
        Rat mid = (lo + hi) * kHalf;
        if (compare_measure_to_fraction(mid, q, max_precision_bits) == std::strong_ordering::greater)
            lo = mid; // angle at mid still wider than q: cosine lies above mid
        else
            hi = mid;
    }
    return {lo, hi};
}

RatInterval chord_ratio(const FractionAngle& a, const Rat& max_width,
                        unsigned max_precision_bits) {
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");
    Rat wc = max_width * max_width / Rat(32);
    if (max_width / Rat(8) < wc) wc = max_width / Rat(8);
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatInterval c = cos_enclosure(a, wc, max_precision_bits);
        RatInterval sigma = sqrt_enclosure(clamp_to(kTwo - (kTwo * c), Rat(0), Rat(4)), wc);
        if (sigma.width() <= max_width) return sigma;
        wc = wc / Rat(16);
    }
    throw precision_error("chord ratio width not reached");
}

std::variant<GeneralizedAngle, EnclosedAngle>
add_generalized(const GeneralizedAngle& g, const GeneralizedAngle& h, const Rat& max_width,
                unsigned max_precision_bits) {
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");
    Int turns = g.half_turns() + h.half_turns();
    if (!g.residual())
        return GeneralizedAngle(turns, h.residual());
    if (!h.residual())
        return GeneralizedAngle(turns, g.residual());
    const ProperAngle& phi = *g.residual();
    const ProperAngle& psi = *h.residual();

    // Exact boundary: the residuals are supplements iff the sum is a
    // straight angle. Detecting this upfront keeps the interval route
    // terminating (everywhere else the sum separates from the half turn).
    if (phi.invariant() == -psi.invariant())
        return GeneralizedAngle(turns + 1, std::nullopt);

    if (phi.rational_circle() && psi.rational_circle()) {
        UnitCirclePoint z = compose_rotations(circle_point(phi), circle_point(psi));
        if (z.s.sign() > 0)
            return GeneralizedAngle(turns, angle_from_circle_point(z));
        if (z.s.is_zero())
            throw internal_error("unflagged supplement pair in rational-circle addition");
        // Sum crossed the half turn: reflect back into (0, pi).
        return GeneralizedAngle(turns + 1,
                                angle_from_circle_point(UnitCirclePoint(-z.c, -z.s)));
    }

    for (Rat w = max_width * kHalf;; w = w / Rat(64)) {
        if (2 * digits_for_width(w) + 64 > max_precision_bits)
            throw precision_error("half-turn carry undecidable at requested width; refine further");
        RatInterval sum = angular_measure(phi, w, max_precision_bits).halfturn_fraction()
                        + angular_measure(psi, w, max_precision_bits).halfturn_fraction();
        if (sum.hi() < kOne)
            return EnclosedAngle{turns, sum};
        if (sum.lo() > kOne)
            return EnclosedAngle{turns + 1, sum - kOne};
    }
}

} // namespace euclid
