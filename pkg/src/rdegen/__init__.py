"""Block diagonal matching-field degenerations of Richardson varieties in Gr(k, n)."""

from .combinatorics import KSubset, enumerate_subsets, interval, leq, parse_subset, w0_act
from .ideal_core import classify_richardson, is_monomial_free, quadratic_generators
from .matching_field import initial_term, weight_matrix, weight_vector
from .oracle import quadratic_generation_check, richardson_ideal_piece, verify_theorem_main
from .tableaux_smt import enumerate_ssyt, gamma_ell

__version__ = "0.1.0"

__all__ = [
    "KSubset",
    "classify_richardson",
    "enumerate_ssyt",
    "enumerate_subsets",
    "gamma_ell",
    "initial_term",
    "interval",
    "is_monomial_free",
    "leq",
    "parse_subset",
    "quadratic_generation_check",
    "quadratic_generators",
    "richardson_ideal_piece",
    "verify_theorem_main",
    "w0_act",
    "weight_matrix",
    "weight_vector",
]
