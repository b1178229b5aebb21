"""Finite-outcome 2-tester networks and two-way QKD security analysis."""

from ._qcomb import (
    analyze,
    basis_elements,
    binary_entropy,
    closed_form_metrics,
    decompose,
    haar_random_su2,
    info_disturbance,
    is_mutually_unbiased,
    outcome_probabilities,
    run_reference_checks,
    security_threshold,
    simulate,
    tradeoff_curve,
    validate_network,
    x_from_y,
)

__all__ = [
    "analyze",
    "basis_elements",
    "binary_entropy",
    "closed_form_metrics",
    "decompose",
    "haar_random_su2",
    "info_disturbance",
    "is_mutually_unbiased",
    "outcome_probabilities",
    "run_reference_checks",
    "security_threshold",
    "simulate",
    "tradeoff_curve",
    "validate_network",
    "x_from_y",
]

__version__ = "0.1.0"
