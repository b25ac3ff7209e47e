#include <doctest.h>

#include "euclid/axioms.hpp"

using namespace euclid;
using namespace euclid::axioms;

TEST_CASE("the shipped model passes every checkable axiom") {
    auto reports = run_axiom_suite(1, 300);
    REQUIRE(reports.size() == all_axioms().size());
    for (const auto& r : reports) {
        INFO("axiom ", to_string(r.axiom));
        if (r.axiom == AxiomId::C1 || r.axiom == AxiomId::D) {
            CHECK(r.status == Status::not_exactly_checkable);
            CHECK(r.cases_run == 0);
            CHECK_FALSE(r.note.empty());
        } else {
            CHECK(r.status == Status::holds);
            CHECK(r.cases_run == 300);
            CHECK(r.failure_count == 0);
            CHECK(r.failures.empty());
        }
    }
}

TEST_CASE("determinism: same seed, same report") {
    auto a = run_axiom_suite(7, 50);
    auto b = run_axiom_suite(7, 50);
    CHECK(render_report(a) == render_report(b));
    auto c = run_axiom_suite(8, 50);
    // different seeds still have identical shape (all hold), so compare the
    // textual form only for equality of the first two
    CHECK(render_report(a) != "");
    CHECK(c.size() == a.size());
}

TEST_CASE("every mutant is caught by at least one axiom") {
    for (Mutation m : all_mutations()) {
        auto reports = run_axiom_suite(1, 60, hooks_for(m));
        long failing = 0;
        for (const auto& r : reports)
            if (r.status == Status::fails) ++failing;
        INFO("mutation ", to_string(m));
        CHECK(failing > 0);
    }
}

TEST_CASE("specific mutants break the intended axioms") {
    auto fails = [](const std::vector<AxiomReport>& rs, AxiomId id) {
        for (const auto& r : rs)
            if (r.axiom == id) return r.status == Status::fails;
        return false;
    };
    auto inv_between = run_axiom_suite(1, 60, hooks_for(Mutation::invert_betweenness));
    CHECK(fails(inv_between, AxiomId::B1));
    CHECK(fails(inv_between, AxiomId::B2));
    CHECK(fails(inv_between, AxiomId::B3));

    auto inv_col = run_axiom_suite(1, 60, hooks_for(Mutation::invert_collinear));
    CHECK(fails(inv_col, AxiomId::I1));
    CHECK(fails(inv_col, AxiomId::I2));
    CHECK(fails(inv_col, AxiomId::I3));

    CHECK(fails(run_axiom_suite(1, 60, hooks_for(Mutation::collapse_negative_side)), AxiomId::B4));
    CHECK(fails(run_axiom_suite(1, 60, hooks_for(Mutation::corrupt_sq_length)), AxiomId::A));
    auto pos = run_axiom_suite(1, 60, hooks_for(Mutation::positional_seg_congruence));
    CHECK(fails(pos, AxiomId::C2));
    CHECK(fails(pos, AxiomId::C3));
    CHECK(fails(pos, AxiomId::SAS));
    auto neg = run_axiom_suite(1, 60, hooks_for(Mutation::negate_angle_congruence));
    CHECK(fails(neg, AxiomId::C4));
    CHECK(fails(neg, AxiomId::C5));
    CHECK(fails(neg, AxiomId::C6));
    CHECK(fails(neg, AxiomId::SSS));
    CHECK(fails(run_axiom_suite(1, 60, hooks_for(Mutation::drop_line_intersection)), AxiomId::P));
}

TEST_CASE("counterexample minimization shrinks and keeps failing") {
    // under the inverted-betweenness mutant, any valid B2 case fails
    ModelHooks mutant = hooks_for(Mutation::invert_betweenness);
    CaseConfig big{AxiomId::B2,
                   {Rat(377, 491), Rat(-941, 13), Rat(852, 7), Rat(631, 997)}};
    REQUIRE_FALSE(axiom_case_passes(big.axiom, big.params, mutant));
    CaseConfig small = minimize_counterexample(big, mutant);
    CHECK_FALSE(axiom_case_passes(small.axiom, small.params, mutant));

    auto weight = [](const CaseConfig& c) {
        Int total = 0;
        for (const auto& r : c.params) {
            Int n = r.numerator();
            if (n < 0) n = -n;
            total += n + r.denominator();
        }
        return total;
    };
    CHECK(weight(small) < weight(big));
    // a locally minimal configuration is a fixpoint
    CaseConfig again = minimize_counterexample(small, mutant);
    CHECK(weight(again) == weight(small));
}

TEST_CASE("minimization contract: passing input is rejected") {
    CaseConfig passing{AxiomId::B2, {Rat(0), Rat(0), Rat(1), Rat(0)}};
    REQUIRE(axiom_case_passes(passing.axiom, passing.params, ModelHooks::real()));
    CHECK_THROWS_AS(minimize_counterexample(passing), domain_error);
}

TEST_CASE("report rendering is line oriented") {
    auto reports = run_axiom_suite(1, 5);
    std::string text = render_report(reports);
    CHECK(text.find("axiom=I1 status=holds cases=5 failures=0") != std::string::npos);
    CHECK(text.find("axiom=C1 status=not-exactly-checkable cases=0") != std::string::npos);
    CHECK(text.find("axiom=D status=not-exactly-checkable") != std::string::npos);
    CHECK(text.find("note=") != std::string::npos);
}
