from fractions import Fraction

import pytest
from hypothesis import given, settings

from poizat.algebra import Poly, RatFunc
from poizat.expr import (
    ParseError,
    format_expr,
    parse_family,
    parse_ratfunc,
    parse_vector_field,
    specialize_family,
)
from strategies import ratfuncs

z = RatFunc.gen("z")


def test_simple_inputs():
    assert parse_ratfunc("1/z") == 1 / z
    assert parse_ratfunc("1/(z-1) - 1/(z+1)") == 2 / (z * z - 1)
    assert parse_ratfunc("-7/2*z^2") == z * z * Fraction(-7, 2)
    assert parse_ratfunc("z^(3)") == z ** 3


def test_parametric_coefficients_live_in_qc():
    f = parse_ratfunc("z^3 + c", "parametric")
    assert f.is_polynomial()
    assert f.num.coeff(0) == RatFunc.gen("c")


def test_vector_fields():
    V = parse_vector_field("x*y", "y")
    assert V.P == RatFunc.gen("y") * RatFunc.gen("x")
    W = parse_vector_field("y", "y/x")
    assert W.Q * RatFunc.gen("x") == RatFunc.gen("y")


@pytest.mark.parametrize(
    "text, fragment, column",
    [
        ("2z", "implicit multiplication", 2),
        ("z^(-1)", "nonnegative integer", 4),
        ("z^y", "nonnegative integer", 3),
        ("z +", "unexpected", 4),
        ("(z", "expected ')'", 3),
        ("z $ 1", "unexpected character", 3),
    ],
)
def test_syntax_errors_carry_positions(text, fragment, column):
    with pytest.raises(ParseError) as info:
        parse_ratfunc(text)
    assert fragment in str(info.value)
    assert info.value.line == 1 and info.value.column == column


def test_unknown_symbol_and_zero_denominator():
    with pytest.raises(ParseError, match="unknown symbol 'w'"):
        parse_ratfunc("w + 1")
    with pytest.raises(ParseError, match="division by zero"):
        parse_ratfunc("1/(z - z)")
    with pytest.raises(ParseError, match="line 2, column 3"):
        parse_ratfunc("z +\n  q")


def test_format_examples():
    assert format_expr(1 / z) == "1/z"
    assert format_expr(Poly(())) == "0"


@settings(max_examples=300)
@given(ratfuncs())
def test_parse_format_round_trip(f):
    assert parse_ratfunc(format_expr(f)) == f


def test_family_parameters_sorted_and_specialized():
    node, params = parse_family("b*z + a")
    assert params == ["a", "b"]
    assert specialize_family(node, params, [1, 2]) == 2 * z + 1
    with pytest.raises(ValueError, match="parameter point"):
        specialize_family(node, params, [1])
