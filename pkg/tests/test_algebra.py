from fractions import Fraction

import pytest
import sympy as sp
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, settings
from hypothesis import strategies as st

from poizat.algebra import (
    ExtField,
    Poly,
    RatFunc,
    discriminant,
    format_value,
    gcdex,
    poly_gcd,
    resultant,
    squarefree_decompose,
)
from poizat.algebra.linalg import determinant, nullspace, solve_affine
from poizat.expr import parse_ratfunc
from strategies import nonzero_rationals, polys, ratfuncs

Z = Poly.gen("z")
F = Fraction


def to_sympy(p, sym):
    return sp.Poly([sp.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], sym)


def test_basic_arithmetic():
    p = Z ** 2 - 1
    q = Z - 1
    assert p.exquo(q) == Z + 1
    assert divmod(Z ** 3 + 2, Z ** 2) == (Z, Poly((F(2),)))
    assert p.derivative() == 2 * Z
    assert p(3) == 8


def test_integral_has_zero_constant_term():
    assert (3 * Z ** 2 + 1).integral() == Z ** 3 + Z


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@given(polys(nonzero=True), polys(nonzero=True))
def test_gcd_divides_and_bezout(a, b):
    g = poly_gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero()
    s, t, g2 = gcdex(a, b)
    assert s * a + t * b == g2
    assert g2 == g


@settings(max_examples=60)
@given(polys(4), polys(4))
def test_resultant_matches_sylvester_determinant(p, q):
    if p.degree < 1 or q.degree < 1:
        return
    zs = sp.Symbol("z")
    # explicit Sylvester determinant; sympy.resultant drops a sign when q has a zero constant term
    expected = sylvester(to_sympy(p, zs), to_sympy(q, zs), zs).det()
    got = resultant(p, q)
    assert sp.Rational(got.numerator, got.denominator) == expected


def test_resultant_sign_convention():
    assert resultant(Z - 2, Z - 3) == -1


def test_discriminant_parametric():
    c = Poly.gen("c")
    shifted = Poly((c, F(-3), F(0), F(1)), "z")
    assert discriminant(shifted) == Poly((F(108), F(0), F(-27)), "c")


@given(polys(3, nonzero=True), polys(2, nonzero=True))
def test_squarefree_decomposition_reconstructs(a, b):
    p = a * b * b
    parts = squarefree_decompose(p)
    prod = Poly((p.lc,))
    for f, m in parts:
        prod = prod * f ** m
        assert poly_gcd(f, f.derivative()).degree == 0
    assert prod == p


def test_squarefree_rejects_zero():
    with pytest.raises(ValueError):
        squarefree_decompose(Poly(()))


@given(ratfuncs(), ratfuncs())
def test_ratfunc_field_axioms(f, g):
    assert (f + g) - g == f
    if not g.is_zero():
        assert (f / g) * g == f
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@given(ratfuncs())
def test_ratfunc_is_reduced_with_monic_denominator(f):
    assert f.den.lc == 1
    assert poly_gcd(f.num, f.den).degree <= 0


@given(ratfuncs(), nonzero_rationals(), st.integers(-5, 5).map(F))
def test_compose_affine_inverse(f, a, b):
    g = f.compose_affine(a, b)
    assert g.compose_affine(1 / a, -b / a) == f


def test_compose_affine_degenerate():
    with pytest.raises(ValueError, match="degenerate affine map"):
        RatFunc.gen("z").compose_affine(0, 1)


@given(ratfuncs())
def test_format_round_trip(f):
    assert parse_ratfunc(format_value(f)) == f


def test_parameter_field_coefficients():
    c = RatFunc.gen("c")
    z = RatFunc.gen("z")
    f = 1 / (z * z + c)
    assert f.den.coeff(0) == c
    assert (f * (z * z + c)) == 1


def test_extension_field_arithmetic():
    E = ExtField(Poly((F(1), F(1), F(1)), "a"))  # a^2 + a + 1
    w = E.gen()
    assert w ** 3 == 1
    assert w * w.inverse() == 1
    assert w + w ** 2 == -1


def test_linear_algebra():
    rows = [[1, 2, 3], [2, 4, 6]]
    ker = nullspace(rows, 3)
    assert len(ker) == 2
    for v in ker:
        assert sum(r * x for r, x in zip(rows[0], v)) == 0
    sol, kernel = solve_affine([[1, 1], [1, -1]], [3, 1], 2)
    assert sol == [2, 1] and kernel == []
    assert solve_affine([[1, 1], [1, 1]], [1, 2], 2)[0] is None
    assert determinant([[2, 1], [1, 1]]) == 1


def test_gcd_over_rational_function_coefficients():
    X = RatFunc.gen("x")
    Y = RatFunc.gen("y")
    common = Y - 1 / X
    g = poly_gcd((common * (Y + 1)).num, (common * (Y + X)).num)
    assert g == common.num
    assert poly_gcd((Y * Y - X).num, (Y + 3).num).degree == 0


@settings(max_examples=30)
@given(st.lists(st.integers(-5, 5), min_size=7, max_size=7, unique=True))
def test_high_degree_rational_gcd(roots):
    w = Poly((Fraction(1),))
    for r in roots[:4]:
        w = w * Poly((Fraction(-r), Fraction(1)))
    p = w * Poly((Fraction(-roots[4]), Fraction(1))) ** 3
    q = w * Poly((Fraction(-roots[5]), Fraction(1))) * Poly((Fraction(-roots[6]), Fraction(1))) ** 2
    assert poly_gcd(p, q) == w.monic()
