#include "euclid/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>

#include "euclid/axioms.hpp"
#include "euclid/measure.hpp"

namespace euclid::cli {

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitAxiomFailure = 4;

unsigned precision_cap_from_env() {
    if (const char* cap = std::getenv("EUCLID_PRECISION_CAP")) {
        char* end = nullptr;
        long v = std::strtol(cap, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
        throw domain_error("EUCLID_PRECISION_CAP must be a positive integer (bits)");
    }
    return kDefaultPrecisionBits;
}

// Printable result: exact rational when the enclosure is degenerate,
// otherwise directed decimal endpoints. Every value carries its unit.
struct OutputRecord {
    std::string label;
    RatInterval enclosure = RatInterval::point(Rat(0));
    std::string unit = "dimensionless";
    int digits = 12;
};

void print_record(std::ostream& out, const OutputRecord& rec, bool machine) {
    const bool exact = rec.enclosure.is_point();
    std::string lo = decimal_string(rec.enclosure.lo(), rec.digits, RoundDir::down);
    std::string hi = decimal_string(rec.enclosure.hi(), rec.digits, RoundDir::up);
    std::string width = decimal_string(rec.enclosure.width(), rec.digits, RoundDir::up);
    if (machine) {
        out << "label=" << rec.label;
        if (exact) out << " exact=" << rec.enclosure.lo().str();
        out << " unit=" << rec.unit << " lo=" << lo << " hi=" << hi << " width=" << width
            << "\n";
        return;
    }
    if (exact) {
        out << rec.label << " = " << rec.enclosure.lo().str() << " " << rec.unit
            << " (exact)\n";
    } else {
        out << rec.label << " in [" << lo << ", " << hi << "] " << rec.unit
            << "  (lo rounded down, hi rounded up)\n";
        out << "width <= " << width << "\n";
    }
}

Rat parse_rat(const std::string& text) {
    return Rat::from_string(text);
}

AngleUnit unit_from_string(const std::string& name) {
    if (name == "radian") return AngleUnit::radian;
    if (name == "degree") return AngleUnit::degree;
    if (name == "halfturn") return AngleUnit::halfturn;
    throw domain_error("unknown unit '" + name + "' (use radian, degree, or halfturn)");
}

std::string unit_name(AngleUnit u) {
    switch (u) {
    case AngleUnit::radian: return "radian";
    case AngleUnit::degree: return "degree";
    case AngleUnit::halfturn: return "halfturn";
    }
    return "?";
}

int cmd_pi(int doublings, int digits, bool machine, std::ostream& out) {
    PiEnclosure e = [&] {
        if (doublings >= 0) return pi_enclosure(static_cast<unsigned>(doublings));
        Rat target(Int(1), boost::multiprecision::pow(Int(10), static_cast<unsigned>(digits)));
        return pi_enclosure_for_width(target, 64);
    }();
    OutputRecord rec;
    rec.label = "pi";
    rec.enclosure = e.bounds;
    rec.digits = std::max(12, digits + 2);
    if (machine)
        out << "doublings=" << e.doublings << " polygon=" << (6u << e.doublings) << "\n";
    else
        out << "polygon doubling: k=" << e.doublings << " (" << (6u << e.doublings)
            << "-gon)\n";
    print_record(out, rec, machine);
    return 0;
}

int cmd_measure(const std::vector<std::string>& coords, const std::string& unit_text,
                const std::string& width_text, bool machine, unsigned cap, std::ostream& out) {
    std::vector<Rat> c;
    for (const auto& s : coords) c.push_back(parse_rat(s));
    PointQ apex{c[0], c[1]}, b{c[2], c[3]}, cc{c[4], c[5]};
    ProperAngle angle = angle_from_points(apex, b, cc);
    Rat width = parse_rat(width_text);
    AngleUnit unit = unit_from_string(unit_text);
    MeasureEnclosure m = angular_measure(angle, width, cap);
    OutputRecord rec;
    rec.label = "theta";
    rec.enclosure = m.in_unit(unit);
    rec.unit = unit_name(unit);
    print_record(out, rec, machine);
    return 0;
}

int cmd_ratio(const std::vector<std::string>& coords, const std::string& width_text,
              bool machine, std::ostream& out) {
    std::vector<Rat> c;
    for (const auto& s : coords) c.push_back(parse_rat(s));
    SqLength x = sq_length(SegmentQ({c[0], c[1]}, {c[2], c[3]}));
    SqLength y = sq_length(SegmentQ({c[4], c[5]}, {c[6], c[7]}));
    OutputRecord rec;
    rec.label = "ratio";
    rec.enclosure = length_ratio(x, y, parse_rat(width_text));
    rec.unit = "dimensionless";
    print_record(out, rec, machine);
    return 0;
}

int cmd_sum(const std::vector<std::string>& coords, long long turns1, long long turns2,
            const std::string& unit_text, const std::string& width_text, bool machine,
            unsigned cap, std::ostream& out) {
    std::vector<Rat> c;
    for (const auto& s : coords) c.push_back(parse_rat(s));
    GeneralizedAngle g(Int(turns1),
                       angle_from_points({c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}));
    GeneralizedAngle h(Int(turns2),
                       angle_from_points({c[6], c[7]}, {c[8], c[9]}, {c[10], c[11]}));
    Rat width = parse_rat(width_text);
    AngleUnit unit = unit_from_string(unit_text);

    auto result = add_generalized(g, h, width, cap);
    MeasureEnclosure measure = [&]() -> MeasureEnclosure {
        if (const auto* exact = std::get_if<GeneralizedAngle>(&result)) {
            if (machine) {
                out << "halfturns=" << exact->half_turns();
                if (exact->residual()) {
                    out << " residual_inv=" << exact->residual()->invariant().str();
                    if (exact->residual()->rational_sin())
                        out << " residual_sin=" << exact->residual()->rational_sin()->str();
                } else {
                    out << " residual=zero";
                }
                out << "\n";
            } else {
                out << "sum = " << exact->half_turns() << " half-turn(s) + ";
                if (exact->residual())
                    out << "angle(inv=" << exact->residual()->invariant().str() << ")";
                else
                    out << "0";
                out << "\n";
            }
            return angular_measure(*exact, width, cap);
        }
        const auto& enclosed = std::get<EnclosedAngle>(result);
        if (machine)
            out << "halfturns=" << enclosed.half_turns
                << " residual_lo=" << enclosed.residual_halfturn.lo().str()
                << " residual_hi=" << enclosed.residual_halfturn.hi().str() << "\n";
        else
            out << "sum = " << enclosed.half_turns
                << " half-turn(s) + residual enclosed in "
                << to_string(enclosed.residual_halfturn) << " half-turns\n";
        RatInterval fraction = Rat(enclosed.half_turns) + enclosed.residual_halfturn;
        return {fraction, pi_enclosure_for_width(width / Rat(8)).doublings};
    }();

    OutputRecord rec;
    rec.label = "theta";
    rec.enclosure = measure.in_unit(unit);
    rec.unit = unit_name(unit);
    print_record(out, rec, machine);
    return 0;
}

int cmd_axioms(std::uint64_t seed, long cases, const std::string& mutate, std::ostream& out) {
    axioms::ModelHooks hooks = axioms::ModelHooks::real();
    if (!mutate.empty()) {
        auto m = axioms::mutation_from_string(mutate);
        if (!m) throw domain_error("unknown mutation '" + mutate + "'");
        hooks = axioms::hooks_for(*m);
        out << "mutation=" << mutate << "\n";
    }
    auto reports = axioms::run_axiom_suite(seed, cases, hooks);
    out << axioms::render_report(reports);
    for (const auto& r : reports)
        if (r.status == axioms::Status::fails) return kExitAxiomFailure;
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact angle measurement over the rational plane"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "emit key=value records");

    auto* pi_cmd = app.add_subcommand("pi", "certified pi bounds by Archimedes polygon doubling");
    int doublings = -1, digits = -1;
    auto* od = pi_cmd->add_option("--doublings", doublings, "number of doublings k (6*2^k-gon)");
    auto* og = pi_cmd->add_option("--digits", digits, "decimal digits: least k with width <= 10^-digits");
    od->excludes(og);
    og->excludes(od);

    auto* measure_cmd =
        app.add_subcommand("measure", "certified angular measure of the angle B-A-C at apex A");
    std::vector<std::string> measure_coords;
    std::string unit = "radian", width = "1e-9";
    measure_cmd->add_option("coords", measure_coords, "ax ay bx by cx cy (rationals)")
        ->expected(6);
    measure_cmd->add_option("--unit", unit, "radian | degree | halfturn (default radian)");
    measure_cmd->add_option("--width", width, "enclosure width bound (default 1e-9)");

    auto* ratio_cmd =
        app.add_subcommand("ratio", "certified length ratio |segment1| / |segment2|");
    std::vector<std::string> ratio_coords;
    std::string ratio_width = "1e-9";
    ratio_cmd->add_option("coords", ratio_coords, "x1 y1 x2 y2 x3 y3 x4 y4 (two segments)")
        ->expected(8);
    ratio_cmd->add_option("--width", ratio_width, "enclosure width bound (default 1e-9)");

    auto* sum_cmd = app.add_subcommand("sum", "generalized angle sum with half-turn carry");
    std::vector<std::string> sum_coords;
    long long turns1 = 0, turns2 = 0;
    std::string sum_unit = "radian", sum_width = "1e-9";
    sum_cmd->add_option("coords", sum_coords, "two angle triples: ax ay bx by cx cy dx dy ex ey fx fy")
        ->expected(12);
    sum_cmd->add_option("--halfturns1", turns1, "half turns added to the first angle");
    sum_cmd->add_option("--halfturns2", turns2, "half turns added to the second angle");
    sum_cmd->add_option("--unit", sum_unit, "radian | degree | halfturn (default radian)");
    sum_cmd->add_option("--width", sum_width, "enclosure width bound (default 1e-9)");

    auto* axioms_cmd = app.add_subcommand("axioms", "randomized axiom verification suite");
    std::uint64_t seed = 1;
    long cases = 1000;
    std::string mutate;
    axioms_cmd->add_option("--seed", seed, "generator seed (default 1)");
    axioms_cmd->add_option("--cases", cases, "cases per axiom (default 1000)");
    axioms_cmd->add_option("--mutate", mutate, "fault-injection self-test: corrupt one model predicate");

    std::vector<const char*> argv;
    argv.push_back("euclid");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        unsigned cap = precision_cap_from_env();
        if (pi_cmd->parsed()) {
            if ((doublings < 0) == (digits < 0))
                throw domain_error("pi: give exactly one of --doublings or --digits");
            return cmd_pi(doublings, digits, machine, out);
        }
        if (measure_cmd->parsed())
            return cmd_measure(measure_coords, unit, width, machine, cap, out);
        if (ratio_cmd->parsed()) return cmd_ratio(ratio_coords, ratio_width, machine, out);
        if (sum_cmd->parsed())
            return cmd_sum(sum_coords, turns1, turns2, sum_unit, sum_width, machine, cap, out);
        if (axioms_cmd->parsed()) return cmd_axioms(seed, cases, mutate, out);
        throw domain_error("no subcommand given");
    } catch (const precision_error& e) {
        err << "precision error: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

} // namespace euclid::cli
