"""Exact rational, polynomial and rational-function arithmetic."""

from fractions import Fraction

from .kernels import BACKEND
from .parse import parse_interval, parse_piecewise, parse_point, parse_poly, parse_rational, parse_ratfun
from .poly import X, Poly, as_fraction
from .ratfun import RatFun
from .roots import (
    NEG_INF,
    POS_INF,
    WHOLE_LINE,
    AlgebraicPoint,
    Infinity,
    algebraic_sign,
    compare_points,
    isolate_roots,
    poly_nonneg,
    rational_between,
    roots_between,
    sturm_count,
)


def poly_ring_ops(op: str, a: Poly, b=None) -> Poly:
    """Dispatch ``add|sub|mul|pow|compose|derivative`` on polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        return a ** int(b)
    if op == "compose":
        return a.compose(b if isinstance(b, Poly) else Poly.const(b))
    if op == "derivative":
        return a.derivative()
    raise ValueError(f"unknown polynomial operation {op!r}")


__all__ = [
    "BACKEND", "Fraction", "Poly", "X", "RatFun", "as_fraction",
    "NEG_INF", "POS_INF", "WHOLE_LINE", "AlgebraicPoint", "Infinity",
    "algebraic_sign", "compare_points", "isolate_roots", "poly_nonneg",
    "rational_between", "roots_between", "sturm_count", "poly_ring_ops",
    "parse_ratfun", "parse_poly", "parse_rational", "parse_point",
    "parse_interval", "parse_piecewise",
]
