"""Affine Weyl group combinatorics: lengths, coset representatives,
Schubert-variety dimensions, strata and resolutive sequences."""

from ._affweyl import (
    AffineWeyl,
    Element,
    InvariantViolation,
    antidominance_leq,
    antidominant_rep,
    enumerate_reps,
    maxmin_rep,
    min_left_rep,
    min_right_rep,
    resolve,
    schubert_dim,
    special_dim,
    strata,
    strata_dot,
    unitary_example,
    waldspurger_length,
)

__all__ = [
    "AffineWeyl",
    "Element",
    "InvariantViolation",
    "antidominance_leq",
    "antidominant_rep",
    "enumerate_reps",
    "maxmin_rep",
    "min_left_rep",
    "min_right_rep",
    "resolve",
    "schubert_dim",
    "special_dim",
    "strata",
    "strata_dot",
    "unitary_example",
    "waldspurger_length",
]
