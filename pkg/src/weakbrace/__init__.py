"""Finite weak braces and the set-theoretic Yang-Baxter solutions they induce."""

from .brace import (
    WeakBrace,
    axiom_report,
    make_weak_brace,
    opposite,
    structural_report,
    structure_class,
)
from .constructions import (
    almost_trivial_wb,
    double_semidirect,
    double_solution_check,
    example_products,
    matched_product,
    matched_solution_check,
    semidirect_system,
    trivial_wb,
    validate_double_system,
    validate_matched_system,
)
from .enumeration import are_isomorphic, canonical_form, enumerate_inverse_semigroups, enumerate_weak_braces
from .errors import AlgebraError
from .factorization import bullet_brace, circ_brace, find_exact_factorizations, sym3_showcase
from .semigroup import CayleyTable, InverseSemigroupView, as_inverse_semigroup, build, symmetric
from .solutions import (
    PairMap,
    are_equivalent,
    check_braid,
    classify,
    closed_form_power,
    compose,
    op_solution,
    power,
    regularity_report,
    solution_of,
)

__all__ = [
    "AlgebraError", "CayleyTable", "InverseSemigroupView", "PairMap", "WeakBrace",
    "almost_trivial_wb", "are_equivalent", "are_isomorphic", "as_inverse_semigroup", "axiom_report",
    "build", "bullet_brace", "canonical_form", "check_braid", "circ_brace", "classify",
    "closed_form_power", "compose", "double_semidirect", "double_solution_check",
    "enumerate_inverse_semigroups", "enumerate_weak_braces", "example_products",
    "find_exact_factorizations", "make_weak_brace", "matched_product", "matched_solution_check",
    "op_solution", "opposite", "power", "regularity_report", "semidirect_system", "solution_of",
    "structural_report", "structure_class", "sym3_showcase", "symmetric", "trivial_wb",
    "validate_double_system", "validate_matched_system",
]
