"""Exact rational arithmetic, linear algebra, polynomials and LP."""

from .rational import Fraction, Q, format_rational, parse_rational
from .matrix import RationalMatrix, det, kernel_basis, minor, rank, rref
from .poly import MultiPoly, monomials, poly_det
from .lp import Infeasible, Unbounded, feasible_point, solve_lp

__all__ = [
    "Fraction", "Q", "format_rational", "parse_rational",
    "RationalMatrix", "det", "kernel_basis", "minor", "rank", "rref",
    "MultiPoly", "monomials", "poly_det",
    "Infeasible", "Unbounded", "feasible_point", "solve_lp",
]
