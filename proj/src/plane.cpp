#include "euclid/plane.hpp"

namespace euclid {

SegmentQ::SegmentQ(PointQ a_, PointQ b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a == b)
        throw domain_error("degenerate segment: endpoints coincide");
}

RayQ::RayQ(PointQ origin_, PointQ through_) : origin(std::move(origin_)), through(std::move(through_)) {
    if (origin == through)
        throw domain_error("degenerate ray: origin and through coincide");
}

SqLength::SqLength(Rat value) : v_(std::move(value)) {
    if (v_.sign() <= 0)
        throw domain_error("squared length must be positive");
}

int orientation(const PointQ& a, const PointQ& b, const PointQ& c) {
    Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return det.sign();
}

bool collinear(const PointQ& a, const PointQ& b, const PointQ& c) {
    return orientation(a, b, c) == 0;
}

bool betweenness(const PointQ& a, const PointQ& b, const PointQ& c) {
    if (a == b || b == c || a == c) return false;
    if (!collinear(a, b, c)) return false;
    // b strictly inside segment ac: b sits on the a-side of c and the c-side
    // of a, measured along the line.
    Rat d1 = (b.x - a.x) * (c.x - a.x) + (b.y - a.y) * (c.y - a.y);
    Rat d2 = (b.x - c.x) * (a.x - c.x) + (b.y - c.y) * (a.y - c.y);
    return d1.sign() > 0 && d2.sign() > 0;
}

int side_of_line(const PointQ& p, const PointQ& a, const PointQ& b) {
    if (a == b)
        throw domain_error("line through coincident points");
    return orientation(a, b, p);
}

bool on_ray(const PointQ& p, const RayQ& ray) {
    // Every collinear point except those with the origin strictly between
    // them and `through`.
    return collinear(ray.origin, ray.through, p)
           && !betweenness(p, ray.origin, ray.through);
}

SqLength sq_length(const SegmentQ& s) {
    Rat dx = s.a.x - s.b.x, dy = s.a.y - s.b.y;
    return SqLength(dx * dx + dy * dy);
}

std::optional<PointQ> line_intersection(const PointQ& a, const PointQ& b,
                                        const PointQ& c, const PointQ& d) {
    if (a == b || c == d)
        throw domain_error("line through coincident points");
    Rat r1x = b.x - a.x, r1y = b.y - a.y;
    Rat r2x = d.x - c.x, r2y = d.y - c.y;
    Rat denom = r1x * r2y - r1y * r2x;
    if (denom.is_zero()) return std::nullopt;
    Rat t = ((c.x - a.x) * r2y - (c.y - a.y) * r2x) / denom;
    return PointQ{a.x + t * r1x, a.y + t * r1y};
}

namespace {

// Exact branch predicate for the ratio search: a/b <= sqrt(x/y) for a,b >= 1.
bool fraction_below_ratio(const Int& a, const Int& b, const Rat& x, const Rat& y) {
    // a^2 * y <= b^2 * x, cleared of denominators.
    Int aa = a * a;
    Int bb = b * b;
    return Rat(aa) * y <= Rat(bb) * x;
}

} // namespace

RatInterval length_ratio(const SqLength& x, const SqLength& y, const Rat& max_width,
                         unsigned max_steps) {
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");

    Rat ratio = x.value() / y.value();
    if (auto r = ratio.sqrt_exact())
        return RatInterval::point(*r);

    // Integer part first (this is the Archimedean step: some multiple of one
    // length exceeds the other), then Stern-Brocot descent between n and n+1.
    Int n = 1;
    while (fraction_below_ratio(n, 1, x.value(), y.value())) n <<= 1;
    Int lo_n = n >> 1, hi_n = n;
    while (hi_n - lo_n > 1) {
        Int mid = (lo_n + hi_n) >> 1;
        (fraction_below_ratio(mid, 1, x.value(), y.value()) ? lo_n : hi_n) = mid;
    }
    // Ratio is irrational here, so lo_n < sqrt(x/y) < lo_n + 1 strictly.
    Int pl = lo_n, ql = 1, ph = lo_n + 1, qh = 1;

    // Invariant: pl/ql < sqrt(x/y) < ph/qh with ph*ql - pl*qh == 1, so the
    // current width is exactly 1/(ql*qh).
    auto run_ok = [&](bool left, const Int& t) {
        Int num = left ? pl + t * ph : ph + t * pl;
        Int den = left ? ql + t * qh : qh + t * ql;
        return fraction_below_ratio(num, den, x.value(), y.value()) == left;
    };
    for (unsigned step = 0; step < max_steps; ++step) {
        if (Rat(ph, qh) - Rat(pl, ql) <= max_width)
            return {Rat(pl, ql), Rat(ph, qh)};
        // Continued-fraction run acceleration: repeated mediants toward one
        // side form a run; double the multiplicity while the exact branch
        // test keeps answering the same way, then binary-search the end.
        bool left = fraction_below_ratio(pl + ph, ql + qh, x.value(), y.value());
        Int t = 1;
        while (run_ok(left, t << 1)) t <<= 1;
        Int lo_t = t, hi_t = t << 1;
        while (hi_t - lo_t > 1) {
            Int mid = (lo_t + hi_t) >> 1;
            (run_ok(left, mid) ? lo_t : hi_t) = mid;
        }
        if (left) {
            pl += lo_t * ph;
            ql += lo_t * qh;
        } else {
            ph += lo_t * pl;
            qh += lo_t * ql;
        }
    }
    throw precision_error("length_ratio: requested width not reached within step cap");
}

RatInterval add_lengths(const SqLength& x, const SqLength& y, const Rat& max_width) {
    if (max_width.sign() <= 0)
        throw domain_error("max_width must be positive");
    Rat base = x.value() + y.value();
    Rat prod = x.value() * y.value();
    if (auto r = prod.sqrt_exact())
        return RatInterval::point(base + Rat(2) * *r);
    RatInterval root = sqrt_enclosure(prod, max_width / Rat(2));
    return base + (Rat(2) * root);
}

} // namespace euclid
