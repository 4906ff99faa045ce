"""
Oracle Package

Brute-force verification: deterministic random forms, conics over F_p with
exhaustive point enumeration, and axiom sweeps reported as AxiomReport.
"""

from .sampler import (
    FormConstraint,
    random_form_sampler,
    random_rational,
    random_scalar,
    random_pair,
)
from .enumeration import FiniteConic, enumerate_conic_points
from .axioms import (
    partition,
    build_triple_table,
    exhaustive_axiom_check,
    exhaustive_algebra_check,
    random_conic_points,
    random_conic_check,
)

__all__ = [
    "FormConstraint",
    "random_form_sampler",
    "random_rational",
    "random_scalar",
    "random_pair",
    "FiniteConic",
    "enumerate_conic_points",
    "partition",
    "build_triple_table",
    "exhaustive_axiom_check",
    "exhaustive_algebra_check",
    "random_conic_points",
    "random_conic_check",
]
