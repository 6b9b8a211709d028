"""Exact arithmetic kernel: rationals, polynomials, rational functions, Q(c)."""

from fractions import Fraction as Rational

from .fields import AlgElem, ExtField
from .poly import (
    Poly,
    discriminant,
    gcdex,
    poly_gcd,
    resultant,
    solve_bezout,
    squarefree_decompose,
    squarefree_part,
)
from .printing import format_poly, format_ratfunc, format_value
from .ratfunc import RatFunc, as_ratfunc, compose_affine, param_field_gen

__all__ = [
    "AlgElem",
    "ExtField",
    "Poly",
    "RatFunc",
    "Rational",
    "as_ratfunc",
    "compose_affine",
    "discriminant",
    "format_poly",
    "format_ratfunc",
    "format_value",
    "gcdex",
    "param_field_gen",
    "poly_gcd",
    "resultant",
    "solve_bezout",
    "squarefree_decompose",
    "squarefree_part",
]
