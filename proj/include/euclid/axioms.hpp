#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "euclid/angle.hpp"
#include "euclid/plane.hpp"

namespace euclid::axioms {

// Axioms and theorems of the Hilbert-plane development that the rational
// model is checked against. C1 and D are reported, not checked: the first
// fails in the rational plane for incommensurable lengths, the second is a
// second-order statement (see run_axiom_suite).
enum class AxiomId { I1, I2, I3, B1, B2, B3, B4, C1, C2, C3, C4, C5, C6, SAS, SSS, A, D, P };

const std::vector<AxiomId>& all_axioms();
std::string to_string(AxiomId id);
std::optional<AxiomId> axiom_from_string(const std::string& name);

enum class Status { holds, fails, not_exactly_checkable };
std::string to_string(Status s);

// One randomized case: free parameters only. Checkers derive constrained
// configurations (collinear triples, interior points, rigid copies) from
// the free parameters, so shrinking a failing case keeps it structurally
// valid. Parameters that land outside a checker's preconditions make the
// case pass vacuously.
struct CaseConfig {
    AxiomId axiom;
    std::vector<Rat> params;
};

struct AxiomReport {
    AxiomId axiom = AxiomId::I1;
    long cases_run = 0;
    long failure_count = 0;
    std::vector<CaseConfig> failures; // minimized exemplars, at most a handful
    Status status = Status::holds;
    std::string note; // reason when not exactly checkable
};

// The model predicates consulted by the checks. Fault injection swaps out
// single entries; everything else (configuration construction) uses the
// trusted implementation, so a mutant shows up as axiom failures rather
// than as garbage configurations.
struct ModelHooks {
    std::function<bool(const PointQ&, const PointQ&, const PointQ&)> collinear;
    std::function<bool(const PointQ&, const PointQ&, const PointQ&)> between;
    std::function<int(const PointQ&, const PointQ&, const PointQ&)> side; // (p, a, b)
    std::function<Rat(const PointQ&, const PointQ&)> sq_length;
    std::function<bool(const PointQ&, const PointQ&, const PointQ&, const PointQ&)> seg_congruent;
    std::function<bool(const ProperAngle&, const ProperAngle&)> angle_congruent;
    std::function<std::optional<PointQ>(const PointQ&, const PointQ&, const PointQ&, const PointQ&)>
        line_intersect;

    static ModelHooks real();
};

// Each mutant corrupts one model predicate; the suite must report at least
// one failing axiom for every one of them.
enum class Mutation {
    invert_collinear,          // detected by I1, I2, I3
    invert_betweenness,        // detected by B1, B2, B3
    collapse_negative_side,    // detected by B4
    corrupt_sq_length,         // detected by A
    positional_seg_congruence, // detected by C2, C3, SAS
    negate_angle_congruence,   // detected by C4, C5, C6, SSS
    drop_line_intersection,    // detected by P
};

const std::vector<Mutation>& all_mutations();
std::string to_string(Mutation m);
std::optional<Mutation> mutation_from_string(const std::string& name);
ModelHooks hooks_for(Mutation m);

std::size_t param_count(AxiomId id);

bool axiom_case_passes(AxiomId id, const std::vector<Rat>& params, const ModelHooks& hooks);

// Greedy coordinate-wise shrink of a failing configuration toward small
// numerators and denominators; the result still fails. Passing input is a
// contract violation.
CaseConfig minimize_counterexample(CaseConfig config, const ModelHooks& hooks = ModelHooks::real());

// Deterministic randomized run: per axiom, cases_per_axiom configurations
// drawn from a generator seeded by (seed, axiom), so reports are identical
// regardless of evaluation order. Coordinates use numerators up to 1000 in
// magnitude and denominators up to 1000.
std::vector<AxiomReport> run_axiom_suite(std::uint64_t seed, long cases_per_axiom,
                                         const ModelHooks& hooks = ModelHooks::real());

// Line-oriented rendering, one axiom per record.
std::string render_report(const std::vector<AxiomReport>& reports);

} // namespace euclid::axioms
