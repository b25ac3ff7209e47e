#include "euclid/axioms.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace euclid::axioms {

namespace {

struct Rigid {
    UnitCirclePoint rot;
    Rat tx, ty;
    PointQ operator()(const PointQ& p) const {
        return {rot.c * p.x - rot.s * p.y + tx, rot.s * p.x + rot.c * p.y + ty};
    }
};

long small_index(const Rat& r, long mod) {
    Int n = r.numerator();
    if (n < 0) n = -n;
    return static_cast<long>(n % mod);
}

// Rational rotation from two free parameters, sine always positive.
UnitCirclePoint rotation_from(const Rat& a, const Rat& b) {
    long u = small_index(a, 30) + 1;
    long v = small_index(b, 30) + 1;
    Rat uu(u), vv(v);
    Rat den = uu * uu + vv * vv;
    return {(vv * vv - uu * uu) / den, Rat(2) * uu * vv / den};
}

// Map an arbitrary rational onto (0, 1).
Rat unit_interval(const Rat& r) {
    Int n = r.numerator(), d = r.denominator();
    if (n < 0) n = -n;
    Int m = n % d;
    if (m.is_zero()) return Rat(1, 2);
    return Rat(m, d);
}

Rat positive_or_one(const Rat& r) {
    if (r.is_zero()) return Rat(1);
    return r.abs();
}

PointQ pt(const std::vector<Rat>& v, std::size_t i) {
    return {v[i], v[i + 1]};
}

bool check_I1(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0), b = pt(v, 2), e = pt(v, 6);
    if (a == b || v[4] == v[5]) return true;
    PointQ c{a.x + v[4] * (b.x - a.x), a.y + v[4] * (b.y - a.y)};
    PointQ d{a.x + v[5] * (b.x - a.x), a.y + v[5] * (b.y - a.y)};
    bool ok = h.collinear(a, b, c) && h.collinear(a, b, d) && h.collinear(c, d, a)
              && h.collinear(c, d, b);
    if (!collinear(a, b, e)) // the line through a, b excludes off-line points
        ok = ok && !h.collinear(a, b, e) && !h.collinear(c, d, e);
    return ok;
}

bool check_I2(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0), b = pt(v, 2);
    if (a == b) return true;
    return h.collinear(a, b, a) && h.collinear(a, b, b);
}

bool check_I3(const std::vector<Rat>& v, const ModelHooks& h) {
    if (h.collinear({Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}))
        return false; // the constant witness of three noncollinear points
    PointQ a = pt(v, 0), b = pt(v, 2), c = pt(v, 4);
    if (a == b || b == c || a == c || collinear(a, b, c)) return true;
    return !h.collinear(a, b, c);
}

bool check_B1(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0);
    Rat dx = v[2], dy = v[3];
    if (dx.is_zero() && dy.is_zero()) return true;
    Rat t = positive_or_one(v[4]), s = positive_or_one(v[5]);
    PointQ b{a.x + t * dx, a.y + t * dy};
    PointQ c{a.x + (t + s) * dx, a.y + (t + s) * dy};
    return h.between(a, b, c) && h.between(c, b, a) && h.collinear(a, b, c);
}

bool check_B2(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0), b = pt(v, 2);
    if (a == b) return true;
    PointQ c{b.x + (b.x - a.x), b.y + (b.y - a.y)};
    return h.between(a, b, c);
}

bool check_B3(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0);
    Rat dx = v[2], dy = v[3];
    if (dx.is_zero() && dy.is_zero()) return true;
    const Rat &t = v[4], &u = v[5], &w = v[6];
    if (t == u || u == w || t == w) return true;
    PointQ p1{a.x + t * dx, a.y + t * dy};
    PointQ p2{a.x + u * dx, a.y + u * dy};
    PointQ p3{a.x + w * dx, a.y + w * dy};
    int count = (h.between(p1, p2, p3) ? 1 : 0) + (h.between(p2, p1, p3) ? 1 : 0)
                + (h.between(p1, p3, p2) ? 1 : 0);
    return count == 1;
}

bool check_B4(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0), b = pt(v, 2), c = pt(v, 4), e = pt(v, 7);
    if (a == b || b == c || a == c || collinear(a, b, c)) return true;
    Rat t = unit_interval(v[6]);
    PointQ d{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    if (e == d) return true;
    // The line (d, e) must avoid all three corners for Pasch's hypothesis.
    if (side_of_line(a, d, e) == 0 || side_of_line(b, d, e) == 0 || side_of_line(c, d, e) == 0)
        return true;
    int sa = h.side(a, d, e), sb = h.side(b, d, e), sc = h.side(c, d, e);
    return sa * sc < 0 || sb * sc < 0;
}

bool check_C2(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0), b = pt(v, 2);
    if (a == b) return true;
    Rigid r1{rotation_from(v[4], v[5]), v[6], v[7]};
    Rigid r2{rotation_from(v[8], v[9]), v[10], v[11]};
    PointQ a2 = r1(a), b2 = r1(b), a3 = r2(a2), b3 = r2(b2);
    return h.seg_congruent(a, b, a, b) && h.seg_congruent(a, b, a2, b2)
           && h.seg_congruent(a2, b2, a, b) && h.seg_congruent(a2, b2, a3, b3)
           && h.seg_congruent(a, b, a3, b3);
}

bool check_C3(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0);
    Rat dx = v[2], dy = v[3];
    if (dx.is_zero() && dy.is_zero()) return true;
    Rat t = positive_or_one(v[4]), s = positive_or_one(v[5]);
    PointQ b{a.x + t * dx, a.y + t * dy};
    PointQ c{a.x + (t + s) * dx, a.y + (t + s) * dy};
    Rigid rig{rotation_from(v[6], v[7]), v[8], v[9]};
    PointQ d = rig(a), e = rig(b), f = rig(c);
    return h.between(d, e, f) && h.seg_congruent(a, b, d, e) && h.seg_congruent(b, c, e, f)
           && h.seg_congruent(a, c, d, f);
}

bool check_C4(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ apex = pt(v, 0);
    Rat dx = v[2], dy = v[3];
    if (dx.is_zero() && dy.is_zero()) return true;
    UnitCirclePoint rot = rotation_from(v[4], v[5]);
    int side = v[6].sign() < 0 ? -1 : 1;
    ProperAngle target = angle_from_circle_point(rot);
    // Lay the class off on the requested side of the base ray.
    Rat s = side > 0 ? rot.s : -rot.s;
    PointQ base{apex.x + dx, apex.y + dy};
    PointQ laid{apex.x + rot.c * dx - s * dy, apex.y + s * dx + rot.c * dy};
    ProperAngle built = angle_from_points(apex, base, laid);
    return h.angle_congruent(built, target) && h.side(laid, apex, base) == side;
}

bool check_C5(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ apex = pt(v, 0);
    Rat dx = v[2], dy = v[3];
    if (dx.is_zero() && dy.is_zero()) return true;
    UnitCirclePoint rot = rotation_from(v[4], v[5]);
    PointQ b{apex.x + dx, apex.y + dy};
    PointQ c{apex.x + rot.c * dx - rot.s * dy, apex.y + rot.s * dx + rot.c * dy};
    ProperAngle a1 = angle_from_points(apex, b, c);
    Rigid r1{rotation_from(v[6], v[7]), v[8], v[9]};
    Rigid r2{rotation_from(v[10], v[11]), v[12], v[13]};
    ProperAngle a2 = angle_from_points(r1(apex), r1(b), r1(c));
    ProperAngle a3 = angle_from_points(r2(r1(apex)), r2(r1(b)), r2(r1(c)));
    return h.angle_congruent(a1, a1) && h.angle_congruent(a1, a2) && h.angle_congruent(a2, a1)
           && h.angle_congruent(a2, a3) && h.angle_congruent(a1, a3);
}

bool check_C6(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ apex = pt(v, 0);
    Rat dx = v[2], dy = v[3];
    if (dx.is_zero() && dy.is_zero()) return true;
    UnitCirclePoint rho1 = rotation_from(v[4], v[5]);
    UnitCirclePoint rho2 = rotation_from(v[6], v[7]);
    UnitCirclePoint both = compose_rotations(rho1, rho2);
    if (both.s.sign() <= 0) return true; // sum not proper: nothing to add
    PointQ b{apex.x + dx, apex.y + dy};
    PointQ c{apex.x + rho1.c * dx - rho1.s * dy, apex.y + rho1.s * dx + rho1.c * dy};
    PointQ d{apex.x + both.c * dx - both.s * dy, apex.y + both.s * dx + both.c * dy};
    Rigid rig{rotation_from(v[8], v[9]), v[10], v[11]};
    PointQ ea = rig(apex), f = rig(b), g = rig(c), hh = rig(d);
    return h.angle_congruent(angle_from_points(apex, b, c), angle_from_points(ea, f, g))
           && h.angle_congruent(angle_from_points(apex, c, d), angle_from_points(ea, g, hh))
           && h.angle_congruent(angle_from_points(apex, b, d), angle_from_points(ea, f, hh));
}

bool check_SAS(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0), b = pt(v, 2), c = pt(v, 4);
    if (a == b || b == c || a == c || collinear(a, b, c)) return true;
    Rigid rig{rotation_from(v[6], v[7]), v[8], v[9]};
    PointQ d = rig(a), e = rig(b), f = rig(c);
    return h.seg_congruent(a, b, d, e) && h.seg_congruent(b, c, e, f)
           && h.seg_congruent(c, a, f, d)
           && h.angle_congruent(angle_from_points(a, b, c), angle_from_points(d, e, f))
           && h.angle_congruent(angle_from_points(b, c, a), angle_from_points(e, f, d))
           && h.angle_congruent(angle_from_points(c, a, b), angle_from_points(f, d, e));
}

bool check_SSS(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0), b = pt(v, 2), c = pt(v, 4);
    if (a == b || b == c || a == c || collinear(a, b, c)) return true;
    Rigid rig{rotation_from(v[6], v[7]), v[8], v[9]};
    PointQ d = rig(a), e = rig(b), f = rig(c);
    // Premise holds exactly: rigid motions preserve squared lengths.
    if (!(sq_length(SegmentQ(a, b)) == sq_length(SegmentQ(d, e)))
        || !(sq_length(SegmentQ(b, c)) == sq_length(SegmentQ(e, f)))
        || !(sq_length(SegmentQ(c, a)) == sq_length(SegmentQ(f, d))))
        return false;
    return h.angle_congruent(angle_from_points(a, b, c), angle_from_points(d, e, f))
           && h.angle_congruent(angle_from_points(b, c, a), angle_from_points(e, f, d))
           && h.angle_congruent(angle_from_points(c, a, b), angle_from_points(f, d, e));
}

bool check_A(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0), b = pt(v, 2), c = pt(v, 4), d = pt(v, 6);
    if (a == b || c == d) return true;
    Rat x = h.sq_length(a, b), y = h.sq_length(c, d);
    if (x.sign() <= 0 || y.sign() <= 0) return false; // lengths must be positive
    RatInterval ratio = length_ratio(SqLength(x), SqLength(y), Rat(1, 1024));
    if (ratio.hi().sign() <= 0) return false; // ratio must be finite and positive
    // Witness for the axiom: an explicit multiple of the first length
    // exceeding the second. n > sqrt(y/x) gives n^2 x > y, checked exactly.
    RatInterval inverse = length_ratio(SqLength(y), SqLength(x), Rat(1, 1024));
    Int n = inverse.hi().ceil() + 1;
    Int nn = n * n;
    return Rat(nn) * x > y;
}

bool check_P(const std::vector<Rat>& v, const ModelHooks& h) {
    PointQ a = pt(v, 0), b = pt(v, 2), p = pt(v, 4);
    if (a == b || collinear(a, b, p)) return true;
    Rat dx = b.x - a.x, dy = b.y - a.y;
    PointQ p2{p.x + dx, p.y + dy};
    if (h.line_intersect(a, b, p, p2).has_value()) return false; // the parallel meets l: wrong
    Rat wx = v[6], wy = v[7];
    if (wx.is_zero() && wy.is_zero()) return true;
    if ((dx * wy - dy * wx).is_zero()) return true; // same direction: not a second candidate
    PointQ q{p.x + wx, p.y + wy};
    auto hit = h.line_intersect(a, b, p, q);
    return hit.has_value(); // every non-parallel line through p meets l
}

using Checker = bool (*)(const std::vector<Rat>&, const ModelHooks&);

struct AxiomSpec {
    AxiomId id;
    const char* name;
    std::size_t params;
    Checker checker; // null for the not-exactly-checkable entries
    const char* note;
};

const AxiomSpec kSpecs[] = {
    {AxiomId::I1, "I1", 8, check_I1, ""},
    {AxiomId::I2, "I2", 4, check_I2, ""},
    {AxiomId::I3, "I3", 6, check_I3, ""},
    {AxiomId::B1, "B1", 6, check_B1, ""},
    {AxiomId::B2, "B2", 4, check_B2, ""},
    {AxiomId::B3, "B3", 7, check_B3, ""},
    {AxiomId::B4, "B4", 9, check_B4, ""},
    {AxiomId::C1, "C1", 0, nullptr,
     "laying off a general length needs a point at irrational distance along a ray; "
     "the rational plane has no such point (e.g. sqrt(2) along the x-axis)"},
    {AxiomId::C2, "C2", 12, check_C2, ""},
    {AxiomId::C3, "C3", 10, check_C3, ""},
    {AxiomId::C4, "C4", 7, check_C4,
     "checked on the rational-circle subclass only; general classes are not constructible here"},
    {AxiomId::C5, "C5", 14, check_C5, ""},
    {AxiomId::C6, "C6", 12, check_C6, ""},
    {AxiomId::SAS, "SAS", 10, check_SAS, ""},
    {AxiomId::SSS, "SSS", 10, check_SSS, ""},
    {AxiomId::A, "A", 8, check_A, ""},
    {AxiomId::D, "D", 0, nullptr,
     "second-order statement over arbitrary cuts of a line; the rational line itself fails it "
     "(the cut at sqrt(2) has no separating point)"},
    {AxiomId::P, "P", 8, check_P, ""},
};

const AxiomSpec& spec_for(AxiomId id) {
    for (const auto& s : kSpecs)
        if (s.id == id) return s;
    throw internal_error("unknown axiom id");
}

} // namespace

const std::vector<AxiomId>& all_axioms() {
    static const std::vector<AxiomId> ids = [] {
        std::vector<AxiomId> v;
        for (const auto& s : kSpecs) v.push_back(s.id);
        return v;
    }();
    return ids;
}

std::string to_string(AxiomId id) {
    return spec_for(id).name;
}

std::optional<AxiomId> axiom_from_string(const std::string& name) {
    for (const auto& s : kSpecs)
        if (name == s.name) return s.id;
    return std::nullopt;
}

std::string to_string(Status s) {
    switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::not_exactly_checkable: return "not-exactly-checkable";
    }
    return "?";
}

ModelHooks ModelHooks::real() {
    ModelHooks h;
    h.collinear = [](const PointQ& a, const PointQ& b, const PointQ& c) {
        return euclid::collinear(a, b, c);
    };
    h.between = [](const PointQ& a, const PointQ& b, const PointQ& c) {
        return euclid::betweenness(a, b, c);
    };
    h.side = [](const PointQ& p, const PointQ& a, const PointQ& b) {
        return euclid::side_of_line(p, a, b);
    };
    h.sq_length = [](const PointQ& a, const PointQ& b) {
        return euclid::sq_length(SegmentQ(a, b)).value();
    };
    h.seg_congruent = [](const PointQ& a, const PointQ& b, const PointQ& c, const PointQ& d) {
        return euclid::sq_length(SegmentQ(a, b)) == euclid::sq_length(SegmentQ(c, d));
    };
    h.angle_congruent = [](const ProperAngle& x, const ProperAngle& y) { return congruent(x, y); };
    h.line_intersect = [](const PointQ& a, const PointQ& b, const PointQ& c, const PointQ& d) {
        return euclid::line_intersection(a, b, c, d);
    };
    return h;
}

const std::vector<Mutation>& all_mutations() {
    static const std::vector<Mutation> ms = {
        Mutation::invert_collinear,          Mutation::invert_betweenness,
        Mutation::collapse_negative_side,    Mutation::corrupt_sq_length,
        Mutation::positional_seg_congruence, Mutation::negate_angle_congruence,
        Mutation::drop_line_intersection,
    };
    return ms;
}

std::string to_string(Mutation m) {
    switch (m) {
    case Mutation::invert_collinear: return "invert-collinear";
    case Mutation::invert_betweenness: return "invert-betweenness";
    case Mutation::collapse_negative_side: return "collapse-negative-side";
    case Mutation::corrupt_sq_length: return "corrupt-sq-length";
    case Mutation::positional_seg_congruence: return "positional-seg-congruence";
    case Mutation::negate_angle_congruence: return "negate-angle-congruence";
    case Mutation::drop_line_intersection: return "drop-line-intersection";
    }
    return "?";
}

std::optional<Mutation> mutation_from_string(const std::string& name) {
    for (Mutation m : all_mutations())
        if (to_string(m) == name) return m;
    return std::nullopt;
}

ModelHooks hooks_for(Mutation m) {
    ModelHooks h = ModelHooks::real();
    switch (m) {
    case Mutation::invert_collinear:
        h.collinear = [](const PointQ& a, const PointQ& b, const PointQ& c) {
            return !collinear(a, b, c);
        };
        break;
    case Mutation::invert_betweenness:
        h.between = [](const PointQ& a, const PointQ& b, const PointQ& c) {
            return !betweenness(a, b, c) && collinear(a, b, c) && !(a == b) && !(b == c)
                   && !(a == c);
        };
        break;
    case Mutation::collapse_negative_side:
        h.side = [](const PointQ& p, const PointQ& a, const PointQ& b) {
            return side_of_line(p, a, b) == 0 ? 0 : 1;
        };
        break;
    case Mutation::corrupt_sq_length:
        h.sq_length = [](const PointQ& a, const PointQ& b) {
            return (a.x - b.x) * (a.y - b.y); // not a length at all
        };
        break;
    case Mutation::positional_seg_congruence:
        h.seg_congruent = [](const PointQ& a, const PointQ& b, const PointQ& c, const PointQ& d) {
            return sq_length(SegmentQ(a, b)) == sq_length(SegmentQ(c, d)) && a == c;
        };
        break;
    case Mutation::negate_angle_congruence:
        h.angle_congruent = [](const ProperAngle& x, const ProperAngle& y) {
            return x.invariant() == -y.invariant();
        };
        break;
    case Mutation::drop_line_intersection:
        h.line_intersect = [](const PointQ&, const PointQ&, const PointQ&,
                              const PointQ&) -> std::optional<PointQ> { return std::nullopt; };
        break;
    }
    return h;
}

std::size_t param_count(AxiomId id) {
    return spec_for(id).params;
}

bool axiom_case_passes(AxiomId id, const std::vector<Rat>& params, const ModelHooks& hooks) {
    const AxiomSpec& s = spec_for(id);
    if (!s.checker)
        throw domain_error("axiom has no exact check in this model");
    if (params.size() != s.params)
        throw domain_error("wrong parameter count for axiom case");
    try {
        return s.checker(params, hooks);
    } catch (const domain_error&) {
        return false; // a hook drove the model into invalid territory
    } catch (const precision_error&) {
        return false;
    }
}

CaseConfig minimize_counterexample(CaseConfig config, const ModelHooks& hooks) {
    if (axiom_case_passes(config.axiom, config.params, hooks))
        throw domain_error("minimize_counterexample requires a failing configuration");

    auto weight = [](const Rat& r) {
        Int n = r.numerator();
        if (n < 0) n = -n;
        return Int(n + r.denominator());
    };
    auto candidates = [](const Rat& r) {
        std::vector<Rat> out = {Rat(0), Rat(1), Rat(-1)};
        Int n = r.numerator(), d = r.denominator();
        if (!n.is_zero()) {
            out.push_back(Rat(n.sign()));
            out.push_back(Rat(n / 2, d));
            out.push_back(Rat(n, (d + 1) / 2));
            out.push_back(Rat(n / 10, d));
        }
        return out;
    };

    bool improved = true;
    for (int round = 0; round < 64 && improved; ++round) {
        improved = false;
        for (std::size_t i = 0; i < config.params.size(); ++i) {
            for (const Rat& cand : candidates(config.params[i])) {
                if (weight(cand) >= weight(config.params[i])) continue;
                Rat saved = config.params[i];
                config.params[i] = cand;
                if (!axiom_case_passes(config.axiom, config.params, hooks)) {
                    improved = true;
                    break; // strictly simpler and still failing: keep it
                }
                config.params[i] = saved;
            }
        }
    }
    return config;
}

std::vector<AxiomReport> run_axiom_suite(std::uint64_t seed, long cases_per_axiom,
                                         const ModelHooks& hooks) {
    if (cases_per_axiom < 1)
        throw domain_error("cases_per_axiom must be at least 1");
    constexpr std::size_t kKeptFailures = 3;
    std::vector<AxiomReport> reports;
    for (const AxiomSpec& s : kSpecs) {
        AxiomReport rep;
        rep.axiom = s.id;
        rep.note = s.note;
        if (!s.checker) {
            rep.status = Status::not_exactly_checkable;
            reports.push_back(std::move(rep));
            continue;
        }
        // Per-axiom generator: reports do not depend on evaluation order.
        std::uint64_t mix = seed;
        for (const char* c = s.name; *c; ++c) mix = mix * 1099511628211ull + std::uint64_t(*c);
        std::mt19937_64 rng(mix);
        auto draw = [&rng] {
            long num = static_cast<long>(rng() % 2001) - 1000;
            long den = static_cast<long>(rng() % 1000) + 1;
            return Rat(Int(num), Int(den));
        };
        for (long i = 0; i < cases_per_axiom; ++i) {
            std::vector<Rat> params;
            params.reserve(s.params);
            for (std::size_t j = 0; j < s.params; ++j) params.push_back(draw());
            if (!axiom_case_passes(s.id, params, hooks)) {
                ++rep.failure_count;
                if (rep.failures.size() < kKeptFailures)
                    rep.failures.push_back(
                        minimize_counterexample({s.id, std::move(params)}, hooks));
            }
            ++rep.cases_run;
        }
        rep.status = rep.failure_count > 0 ? Status::fails : Status::holds;
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::string render_report(const std::vector<AxiomReport>& reports) {
    std::ostringstream os;
    for (const AxiomReport& r : reports) {
        os << "axiom=" << to_string(r.axiom) << " status=" << to_string(r.status)
           << " cases=" << r.cases_run << " failures=" << r.failure_count;
        if (!r.note.empty()) os << " note=\"" << r.note << "\"";
        if (!r.failures.empty()) {
            os << " example=";
            const CaseConfig& c = r.failures.front();
            for (std::size_t i = 0; i < c.params.size(); ++i)
                os << (i ? "," : "") << c.params[i].str();
        }
        os << "\n";
    }
    return os.str();
}

} // namespace euclid::axioms
