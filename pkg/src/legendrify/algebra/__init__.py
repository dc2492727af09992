"""Exact arithmetic over the Gaussian rationals Q(i)."""

from .gaussian import GR, I, ONE, ZERO, GaussianRational, parse_rational, rational_str, to_gr
from .laurent import DEFAULT_ORDER, LaurentSeries, local_expand
from .linalg import Inconsistent, nullspace, rank, rref, solve
from .partial import (
    PartialFractions,
    PFTerm,
    antiderivative,
    factor,
    gaussian_roots,
    partial_fractions,
    residue_at,
    residues,
    squarefree_decomposition,
)
from .poly import Poly, poly_gcd, poly_lcm, poly_xgcd
from .rational import RationalFn, Z, parse_rational_fn

__all__ = [
    "GR", "I", "ONE", "ZERO", "GaussianRational", "parse_rational", "rational_str", "to_gr",
    "DEFAULT_ORDER", "LaurentSeries", "local_expand",
    "Inconsistent", "nullspace", "rank", "rref", "solve",
    "PartialFractions", "PFTerm", "antiderivative", "factor", "gaussian_roots",
    "partial_fractions", "residue_at", "residues", "squarefree_decomposition",
    "Poly", "poly_gcd", "poly_lcm", "poly_xgcd",
    "RationalFn", "Z", "parse_rational_fn",
    "rational_arith",
]


def rational_arith(a: RationalFn, b: RationalFn, op: str) -> RationalFn:
    """Apply ``op`` in {add, sub, mul, div} to two rational functions."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
