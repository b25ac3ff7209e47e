#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "euclid/axioms.hpp"
#include "euclid/cli.hpp"
#include "euclid/measure.hpp"

namespace py = pybind11;
using namespace euclid;

namespace {

Rat rat_from(py::handle obj) {
    if (py::isinstance<py::str>(obj))
        return Rat::from_string(obj.cast<std::string>());
    if (py::isinstance<py::int_>(obj))
        return Rat(Int(py::str(obj).cast<std::string>()));
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
        return Rat(Int(py::str(obj.attr("numerator")).cast<std::string>()),
                   Int(py::str(obj.attr("denominator")).cast<std::string>()));
    throw domain_error("expected int, str, or Fraction");
}

py::object to_fraction(const Rat& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str());
}

py::tuple to_pair(const RatInterval& iv) {
    return py::make_tuple(to_fraction(iv.lo()), to_fraction(iv.hi()));
}

AngleUnit parse_unit(const std::string& name) {
    if (name == "radian") return AngleUnit::radian;
    if (name == "degree") return AngleUnit::degree;
    if (name == "halfturn") return AngleUnit::halfturn;
    throw domain_error("unknown unit '" + name + "'");
}

ProperAngle angle_from(py::handle ax, py::handle ay, py::handle bx, py::handle by,
                       py::handle cx, py::handle cy) {
    return angle_from_points({rat_from(ax), rat_from(ay)}, {rat_from(bx), rat_from(by)},
                             {rat_from(cx), rat_from(cy)});
}

} // namespace

PYBIND11_MODULE(_euclid, m) {
    m.doc() = "exact synthetic-geometry kernel: certified angle measure, pi bounds, "
              "length ratios, and the axiom suite over the rational plane";

    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<precision_error>(m, "PrecisionError", PyExc_RuntimeError);

    m.def(
        "sqrt_bounds",
        [](py::object x, py::object width) {
            return to_pair(sqrt_enclosure(rat_from(x), rat_from(width)));
        },
        py::arg("x"), py::arg("width") = "1e-12",
        "Certified enclosure [lo, hi] of sqrt(x) with hi - lo <= width.");

    m.def(
        "pi_bounds",
        [](unsigned doublings) { return to_pair(pi_enclosure(doublings).bounds); },
        py::arg("doublings"),
        "Half-perimeter bounds of the inscribed/circumscribed 6*2^k-gon.");

    m.def(
        "pi_bounds_for_width",
        [](py::object width) {
            PiEnclosure e = pi_enclosure_for_width(rat_from(width));
            return py::make_tuple(e.doublings, to_fraction(e.bounds.lo()),
                                  to_fraction(e.bounds.hi()));
        },
        py::arg("width"), "Least doublings k whose enclosure is narrower than width.");

    m.def(
        "angle_invariant",
        [](py::object ax, py::object ay, py::object bx, py::object by, py::object cx,
           py::object cy) {
            ProperAngle a = angle_from(ax, ay, bx, by, cx, cy);
            py::object sin = a.rational_sin() ? to_fraction(*a.rational_sin()) : py::none();
            return py::make_tuple(to_fraction(a.invariant()), sin);
        },
        py::arg("ax"), py::arg("ay"), py::arg("bx"), py::arg("by"), py::arg("cx"), py::arg("cy"),
        "Complete congruence invariant sign(cos)*cos^2 of angle B-A-C, plus the "
        "rational sine when the class lies on the rational circle.");

    m.def(
        "measure_from_points",
        [](py::object ax, py::object ay, py::object bx, py::object by, py::object cx,
           py::object cy, const std::string& unit, py::object width) {
            MeasureEnclosure e =
                angular_measure(angle_from(ax, ay, bx, by, cx, cy), rat_from(width));
            return to_pair(e.in_unit(parse_unit(unit)));
        },
        py::arg("ax"), py::arg("ay"), py::arg("bx"), py::arg("by"), py::arg("cx"), py::arg("cy"),
        py::arg("unit") = "radian", py::arg("width") = "1e-9",
        "Certified angular measure of angle B-A-C in the requested unit.");

    m.def(
        "measure_of_fraction",
        [](py::object fraction, const std::string& unit, py::object width) {
            FractionAngle a = from_halfturn_fraction(rat_from(fraction));
            return to_pair(angular_measure(a, rat_from(width)).in_unit(parse_unit(unit)));
        },
        py::arg("fraction"), py::arg("unit") = "radian", py::arg("width") = "1e-9",
        "Measure of the angle that is an exact rational fraction of the half turn "
        "(1/180 is one degree).");

    m.def(
        "chord_ratio_bounds",
        [](py::object ax, py::object ay, py::object bx, py::object by, py::object cx,
           py::object cy, py::object width) {
            return to_pair(chord_ratio(angle_from(ax, ay, bx, by, cx, cy), rat_from(width)));
        },
        py::arg("ax"), py::arg("ay"), py::arg("bx"), py::arg("by"), py::arg("cx"), py::arg("cy"),
        py::arg("width") = "1e-9", "Chord ratio sigma = |BC|/|AB| for the isosceles layout.");

    m.def(
        "chord_sum_lower",
        [](py::object ax, py::object ay, py::object bx, py::object by, py::object cx,
           py::object cy, unsigned bisections) {
            return to_pair(chord_sum_lower_bound(angle_from(ax, ay, bx, by, cx, cy), bisections));
        },
        py::arg("ax"), py::arg("ay"), py::arg("bx"), py::arg("by"), py::arg("cx"), py::arg("cy"),
        py::arg("bisections"),
        "Inscribed broken-line bound: 2^k times the chord of the 2^k-th part.");

    m.def(
        "arc_length_bounds",
        [](py::object ax, py::object ay, py::object bx, py::object by, py::object cx,
           py::object cy, py::object r_sq, py::object width) {
            return to_pair(arc_length(angle_from(ax, ay, bx, by, cx, cy),
                                      SqLength(rat_from(r_sq)), rat_from(width)));
        },
        py::arg("ax"), py::arg("ay"), py::arg("bx"), py::arg("by"), py::arg("cx"), py::arg("cy"),
        py::arg("r_sq"), py::arg("width") = "1e-9",
        "Arc length subtended at squared radius r_sq.");

    m.def(
        "length_ratio_bounds",
        [](py::object x_sq, py::object y_sq, py::object width) {
            return to_pair(length_ratio(SqLength(rat_from(x_sq)), SqLength(rat_from(y_sq)),
                                        rat_from(width)));
        },
        py::arg("x_sq"), py::arg("y_sq"), py::arg("width") = "1e-9",
        "Ratio of lengths given as squared lengths: sqrt(x_sq / y_sq).");

    m.def(
        "sum_from_points",
        [](py::list coords, long long halfturns1, long long halfturns2, py::object width) {
            if (coords.size() != 12)
                throw domain_error("expected 12 coordinates (two angle triples)");
            std::vector<Rat> c;
            for (auto item : coords) c.push_back(rat_from(item));
            GeneralizedAngle g(Int(halfturns1),
                               angle_from_points({c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}));
            GeneralizedAngle h(Int(halfturns2),
                               angle_from_points({c[6], c[7]}, {c[8], c[9]}, {c[10], c[11]}));
            auto result = add_generalized(g, h, rat_from(width));
            py::dict out;
            if (const auto* exact = std::get_if<GeneralizedAngle>(&result)) {
                out["half_turns"] = py::int_(py::str(exact->half_turns().str()));
                out["exact"] = true;
                out["residual_invariant"] =
                    exact->residual() ? to_fraction(exact->residual()->invariant()) : py::none();
            } else {
                const auto& enc = std::get<EnclosedAngle>(result);
                out["half_turns"] = py::int_(py::str(enc.half_turns.str()));
                out["exact"] = false;
                out["residual_halfturn_bounds"] = to_pair(enc.residual_halfturn);
            }
            return out;
        },
        py::arg("coords"), py::arg("halfturns1") = 0, py::arg("halfturns2") = 0,
        py::arg("width") = "1e-9",
        "Generalized angle sum with explicit half-turn carry; exact on the "
        "rational circle, enclosed otherwise.");

    m.def(
        "run_axioms",
        [](std::uint64_t seed, long cases) {
            py::list out;
            for (const auto& r : axioms::run_axiom_suite(seed, cases)) {
                py::dict d;
                d["axiom"] = axioms::to_string(r.axiom);
                d["status"] = axioms::to_string(r.status);
                d["cases"] = r.cases_run;
                d["failures"] = r.failure_count;
                if (!r.note.empty()) d["note"] = r.note;
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = 1, py::arg("cases") = 1000,
        "Randomized verification of the plane axioms in the rational model.");
}
