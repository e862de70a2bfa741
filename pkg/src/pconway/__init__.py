"""Partial Conway semirings: matrix star, truncated power series, weighted
automata, a rational-expression compiler, and identity verification suites."""

from .automata import Automaton, behavior, coefficient_by_paths
from .errors import ConwayError
from .matrix import Matrix, block_star, dual_mat_star, mat_plus, mat_star
from .ratexpr import compile_expr, eval_series, kleene_round_trip, parse
from .semiring import BOOL, NAT, NATINF, NATMAT2, Semiring, get_semiring
from .series import Series, SeriesSemiring, cycle_free_star, proper_star, total_star

__version__ = "0.1.0"

__all__ = [
    "Automaton", "behavior", "coefficient_by_paths", "ConwayError", "Matrix",
    "block_star", "dual_mat_star", "mat_plus", "mat_star", "compile_expr",
    "eval_series", "kleene_round_trip", "parse", "BOOL", "NAT", "NATINF",
    "NATMAT2", "Semiring", "get_semiring", "Series", "SeriesSemiring",
    "cycle_free_star", "proper_star", "total_star",
]
