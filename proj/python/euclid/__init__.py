"""Exact synthetic-geometry kernel: certified angle measure over the rational plane."""

from ._euclid import (
    DomainError,
    PrecisionError,
    angle_invariant,
    arc_length_bounds,
    chord_ratio_bounds,
    chord_sum_lower,
    length_ratio_bounds,
    measure_from_points,
    measure_of_fraction,
    pi_bounds,
    pi_bounds_for_width,
    run_axioms,
    sqrt_bounds,
    sum_from_points,
)

__all__ = [
    "DomainError",
    "PrecisionError",
    "angle_invariant",
    "arc_length_bounds",
    "chord_ratio_bounds",
    "chord_sum_lower",
    "length_ratio_bounds",
    "measure_from_points",
    "measure_of_fraction",
    "pi_bounds",
    "pi_bounds_for_width",
    "run_axioms",
    "sqrt_bounds",
    "sum_from_points",
]
