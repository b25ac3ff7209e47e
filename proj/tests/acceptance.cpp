// Acceptance suite: one line per criterion, executed at the stated
// tolerances. Returns nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "euclid/axioms.hpp"
#include "euclid/cli.hpp"
#include "euclid/measure.hpp"
#include "oracles.hpp"

using namespace euclid;

namespace {

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

UnitCirclePoint rot(long u, long v) {
    Rat uu(u), vv(v);
    Rat den = uu * uu + vv * vv;
    return {(vv * vv - uu * uu) / den, Rat(2) * uu * vv / den};
}

const Rat kWidth9(1, 1000000000);
const Rat kWidth6(1, 1000000);

// Shared corpus for criteria 5 and 6: addable rational-circle pairs.
std::vector<std::pair<ProperAngle, ProperAngle>> addable_pairs(std::size_t count) {
    std::mt19937_64 rng(2024);
    std::vector<std::pair<ProperAngle, ProperAngle>> pairs;
    while (pairs.size() < count) {
        long u1 = static_cast<long>(rng() % 20) + 1, v1 = static_cast<long>(rng() % 20) + 1;
        long u2 = static_cast<long>(rng() % 20) + 1, v2 = static_cast<long>(rng() % 20) + 1;
        ProperAngle a = angle_from_circle_point(rot(u1, v1));
        ProperAngle b = angle_from_circle_point(rot(u2, v2));
        if (addable(a, b)) pairs.emplace_back(a, b);
    }
    return pairs;
}

void criterion_1_archimedes(std::ostream& log) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    int code = cli::run_cli({"pi", "--doublings", "4"}, out, err);
    double elapsed = seconds_since(start);
    require(code == 0, "cmd_pi exited " + std::to_string(code));
    require(elapsed < 1.0, "cmd_pi took " + std::to_string(elapsed) + "s");

    PiEnclosure g96 = pi_enclosure(4);
    require(g96.bounds.lo() > Rat(3) + Rat(10, 71), "96-gon lower bound too small");
    require(g96.bounds.hi() < Rat(3) + Rat(1, 7), "96-gon upper bound too large");

    PiEnclosure fine = pi_enclosure(20);
    require(fine.bounds.width() < Rat(Int(1), boost::multiprecision::pow(Int(10), 10)),
            "pi(20) width " + fine.bounds.width().str());
    require(fine.bounds.contains(Rat::from_string("3.14159265358979323846")),
            "pi(20) misses the reference digits");
    RatInterval oracle = oracles::machin_pi(Rat(Int(1), boost::multiprecision::pow(Int(10), 25)));
    require(fine.bounds.contains(oracle.lo()) && fine.bounds.contains(oracle.hi()),
            "pi(20) disagrees with the Machin oracle");
    log << "96-gon in (3+10/71, 3+1/7), pi(20) width " << decimal_string(fine.bounds.width(), 14, RoundDir::up)
        << ", cli " << elapsed << "s";
}

void criterion_2_right_angle(std::ostream& log) {
    MeasureEnclosure m = angular_measure(ProperAngle::from_invariant(Rat(0)), kWidth9);
    require(m.halfturn_fraction() == RatInterval::point(Rat(1, 2)),
            "right angle halfturn fraction not exactly 1/2");
    require(m.in_unit(AngleUnit::degree) == RatInterval::point(Rat(90)),
            "right angle not exactly 90 degrees");
    RatInterval radian = m.in_unit(AngleUnit::radian);
    require(radian.width() <= kWidth9, "radian width " + radian.width().str());
    RatInterval half_pi =
        Rat(1, 2) * oracles::machin_pi(Rat(Int(1), boost::multiprecision::pow(Int(10), 20)));
    require(radian.contains(half_pi.lo()) && radian.contains(half_pi.hi()),
            "radian view misses pi/2");
    log << "halfturn=[1/2,1/2], degree=90 exact, radian contains pi/2 at width <= 1e-9";
}

void criterion_3_degree(std::ostream& log) {
    FractionAngle degree = from_halfturn_fraction(Rat(1, 180));
    RatInterval radian = angular_measure(degree, kWidth9).in_unit(AngleUnit::radian);
    require(radian.width() <= kWidth9, "width " + radian.width().str());
    RatInterval oracle = Rat(1, 180)
        * oracles::machin_pi(Rat(Int(1), boost::multiprecision::pow(Int(10), 20)));
    require(radian.contains(oracle.lo()) && radian.contains(oracle.hi()),
            "radian view misses pi/180");
    log << "degree class radian view contains pi/180 at width <= 1e-9";
}

void criterion_4_arctan_oracles(std::ostream& log) {
    Rat err(Int(1), boost::multiprecision::pow(Int(10), 15));
    ProperAngle a43 = ProperAngle::from_invariant(Rat(9, 25));
    require(a43.rational_sin() == Rat(4, 5), "3-4-5 class sine");
    RatInterval r43 = angular_measure(a43, kWidth9).in_unit(AngleUnit::radian);
    RatInterval o43 = oracles::atan_enclosure_above_one(Rat(4, 3), err);
    require(r43.width() <= kWidth9, "width " + r43.width().str());
    require(r43.contains(o43.lo()) && r43.contains(o43.hi()), "misses arctan(4/3)");

    ProperAngle a34 = ProperAngle::from_invariant(Rat(16, 25));
    require(a34.rational_sin() == Rat(3, 5), "4-3-5 class sine");
    RatInterval r34 = angular_measure(a34, kWidth9).in_unit(AngleUnit::radian);
    RatInterval o34 = oracles::atan_enclosure(Rat(3, 4), err);
    require(r34.width() <= kWidth9, "width " + r34.width().str());
    require(r34.contains(o34.lo()) && r34.contains(o34.hi()), "misses arctan(3/4)");
    log << "theta encloses arctan(4/3) and arctan(3/4) at width <= 1e-9";
}

void criterion_5_additivity(std::ostream& log) {
    auto start = std::chrono::steady_clock::now();
    auto pairs = addable_pairs(1000);
    for (const auto& [a, b] : pairs) {
        auto sum = std::get<GeneralizedAngle>(
            add_generalized(GeneralizedAngle::proper(a), GeneralizedAngle::proper(b), kWidth9));
        require(sum.half_turns() == 0, "addable pair carried");
        RatInterval whole = angular_measure(*sum.residual(), kWidth9).halfturn_fraction();
        RatInterval split = angular_measure(a, kWidth9).halfturn_fraction()
                          + angular_measure(b, kWidth9).halfturn_fraction();
        require(overlap(whole, split), "theta(a+b) disjoint from theta(a)+theta(b)");
    }
    double elapsed = seconds_since(start);
    require(elapsed < 30.0, "took " + std::to_string(elapsed) + "s");
    log << "1000 addable pairs: enclosures intersect, " << elapsed << "s";
}

void criterion_6_subadditivity(std::ostream& log) {
    auto pairs = addable_pairs(1000);
    for (const auto& [a, b] : pairs) {
        auto sum = std::get<GeneralizedAngle>(
            add_generalized(GeneralizedAngle::proper(a), GeneralizedAngle::proper(b), kWidth6));
        RatInterval s_sum = chord_ratio(*sum.residual(), kWidth6);
        RatInterval s_split = chord_ratio(a, kWidth6) + chord_ratio(b, kWidth6);
        require(s_sum.hi() < s_split.lo(), "sigma subadditivity not separated at width 1e-6");
    }
    log << "1000 pairs at width 1e-6: upper(sigma(a+b)) < lower(sigma(a)+sigma(b))";
}

void criterion_7_envelope(std::ostream& log) {
    std::mt19937_64 rng(77);
    long checked = 0;
    for (int i = 0; i < 900; ++i) {
        long n = static_cast<long>(rng() % 1999999) - 999999;
        require(envelope_check(ProperAngle::from_invariant(Rat(Int(n), Int(1000000)))),
                "enclosed measure not below 4");
        ++checked;
    }
    for (int i = 0; i < 100; ++i) {
        // near-straight classes: invariant below -0.999
        Rat inv = Rat(-999) - Rat(static_cast<long>(rng() % 999) + 1, 1000);
        require(envelope_check(ProperAngle::from_invariant(inv / Rat(1000))),
                "near-straight class escaped the envelope");
        ++checked;
    }
    log << checked << " random classes (including inv < -0.999): theta upper bound < 4";
}

void criterion_8_chordsum(std::ostream& log) {
    ProperAngle right = ProperAngle::from_invariant(Rat(0));
    RatInterval theta = angular_measure(right, kWidth9).in_unit(AngleUnit::radian);
    RatInterval half_pi =
        Rat(1, 2) * oracles::machin_pi(Rat(Int(1), boost::multiprecision::pow(Int(10), 12)));
    Rat prev(-1);
    Rat last_lo(0);
    for (unsigned k = 0; k <= 16; ++k) {
        RatInterval c = chord_sum_lower_bound(right, k);
        require(c.lo() > prev, "lower endpoints not strictly increasing at k=" + std::to_string(k));
        require(c.lo() <= theta.hi(), "chord sum exceeded theta upper bound");
        prev = c.lo();
        last_lo = c.lo();
    }
    require(half_pi.hi() - last_lo <= kWidth6 && last_lo <= half_pi.hi(),
            "k=16 lower bound not within 1e-6 of pi/2");
    log << "k=0..16 strictly increasing, below theta, k=16 within 1e-6 of pi/2";
}

void criterion_9_axioms(std::ostream& log) {
    auto start = std::chrono::steady_clock::now();
    auto reports = axioms::run_axiom_suite(1, 10000);
    double elapsed = seconds_since(start);
    require(elapsed < 60.0, "suite took " + std::to_string(elapsed) + "s");
    for (const auto& r : reports) {
        if (r.axiom == axioms::AxiomId::C1 || r.axiom == axioms::AxiomId::D) {
            require(r.status == axioms::Status::not_exactly_checkable && !r.note.empty(),
                    axioms::to_string(r.axiom) + " must be not-exactly-checkable with a reason");
        } else {
            require(r.status == axioms::Status::holds,
                    axioms::to_string(r.axiom) + " did not hold");
            require(r.failure_count == 0, axioms::to_string(r.axiom) + " had failures");
        }
    }
    for (axioms::Mutation m : axioms::all_mutations()) {
        auto mutated = axioms::run_axiom_suite(1, 60, axioms::hooks_for(m));
        long failing = 0;
        for (const auto& r : mutated)
            if (r.status == axioms::Status::fails) ++failing;
        require(failing > 0, "mutant " + axioms::to_string(m) + " went undetected");
    }
    log << "16 axioms hold at 10^4 cases (" << elapsed << "s), C1/D documented, "
        << axioms::all_mutations().size() << " mutants all detected";
}

void criterion_10_invariance(std::ostream& log) {
    std::mt19937_64 rng(99);
    auto coord = [&rng] {
        return Rat(Int(static_cast<long>(rng() % 2001) - 1000),
                   Int(static_cast<long>(rng() % 50) + 1));
    };
    long done = 0;
    while (done < 1000) {
        PointQ a{coord(), coord()}, b{coord(), coord()}, c{coord(), coord()};
        std::optional<ProperAngle> base;
        try {
            base = angle_from_points(a, b, c);
        } catch (const domain_error&) {
            continue;
        }
        UnitCirclePoint r = rot(static_cast<long>(rng() % 15) + 1,
                                static_cast<long>(rng() % 15) + 1);
        Rat tx = coord(), ty = coord();
        Rat lambda1 = coord().abs() + Rat(1, 3), lambda2 = coord().abs() + Rat(1, 7);
        auto move = [&](const PointQ& p) {
            return PointQ{r.c * p.x - r.s * p.y + tx, r.s * p.x + r.c * p.y + ty};
        };
        PointQ a2 = move(a);
        PointQ b0 = move(b), c0 = move(c);
        PointQ b2{a2.x + lambda1 * (b0.x - a2.x), a2.y + lambda1 * (b0.y - a2.y)};
        PointQ c2{a2.x + lambda2 * (c0.x - a2.x), a2.y + lambda2 * (c0.y - a2.y)};
        ProperAngle moved = angle_from_points(a2, b2, c2);
        require(moved.invariant() == base->invariant(), "invariant changed under rigid motion");
        require(moved.rational_sin() == base->rational_sin(), "sine flag changed");
        ++done;
    }
    log << "1000 re-anchored angles: bit-identical invariants";
}

struct Criterion {
    int number;
    std::string name;
    std::function<void(std::ostream&)> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "archimedes-96gon-and-pi20", criterion_1_archimedes},
        {2, "right-angle-measure", criterion_2_right_angle},
        {3, "degree-class", criterion_3_degree},
        {4, "arctan-oracle-agreement", criterion_4_arctan_oracles},
        {5, "theta-additivity", criterion_5_additivity},
        {6, "sigma-subadditivity", criterion_6_subadditivity},
        {7, "theta-envelope", criterion_7_envelope},
        {8, "chord-sum-convergence", criterion_8_chordsum},
        {9, "axiom-suite", criterion_9_axioms},
        {10, "scale-placement-invariance", criterion_10_invariance},
    };
    int failed = 0;
    for (auto& c : criteria) {
        std::ostringstream detail;
        try {
            c.run(detail);
            std::cout << "[PASS] " << c.number << " " << c.name << ": " << detail.str() << "\n";
        } catch (const Failure& f) {
            ++failed;
            std::cout << "[FAIL] " << c.number << " " << c.name << ": " << f.detail << "\n";
        } catch (const std::exception& e) {
            ++failed;
            std::cout << "[FAIL] " << c.number << " " << c.name << ": exception: " << e.what()
                      << "\n";
        }
    }
    std::cout << (failed == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failed) + " criteria failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
