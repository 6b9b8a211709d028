import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from poizat.puiseux import (
    InsufficientTruncation,
    PuiseuxDerivation,
    PuiseuxSeries,
    apply_derivation,
    log_derivative_residue,
)
from oracles import puiseux_residue

T = 16


@st.composite
def series(draw, m=None):
    m = draw(st.integers(1, 4)) if m is None else m
    v = draw(st.integers(-3 * m, 3 * m))
    cs = draw(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=9), min_size=T, max_size=T))
    if cs[0] == 0:
        cs[0] = Fraction(1)
    return PuiseuxSeries(m, v, tuple(cs), v + T)


def test_arithmetic_examples():
    root = PuiseuxSeries.monomial(Fraction(1, 2), m=2)
    assert (root * root).agrees_with(PuiseuxSeries.monomial(1, m=2))
    inv = PuiseuxSeries.from_terms({0: 1, 1: 1}, 1, T).invert()
    assert [inv.coeff(k) for k in range(T)] == [(-1) ** k for k in range(T)]
    s = PuiseuxSeries.from_terms({0: 2, 1: -1, 3: 5}, 1, 8)
    lifted = s.ramify(2)
    assert lifted.m == 2 and all(lifted.coeff(k) == s.coeff(k) for k in range(4))
    assert lifted.coeff(Fraction(1, 2)) == 0
    with pytest.raises(ZeroDivisionError):
        PuiseuxSeries(1, 0, (), 4).invert()


def test_derivation_examples():
    u = PuiseuxSeries.monomial(Fraction(1, 2), m=2)
    du = apply_derivation(PuiseuxDerivation(dy=u), u)
    expected = PuiseuxSeries.monomial(Fraction(-1, 2), m=2, coeff=Fraction(1, 2)) * u
    assert du.agrees_with(expected)
    dy = PuiseuxSeries.from_terms({2: 3, 5: 1}, 1, T)
    y = PuiseuxSeries.monomial(1)
    assert apply_derivation(PuiseuxDerivation(dy=dy), y).agrees_with(dy)


def test_residue_examples_match_oracle():
    half = PuiseuxSeries.monomial(Fraction(1, 2), m=2)
    cubic = PuiseuxSeries.from_terms({2: 3, 3: 1}, 1, T)
    one = PuiseuxSeries.monomial(0)
    assert log_derivative_residue(half) == 0
    assert log_derivative_residue(cubic) == 0
    assert log_derivative_residue(one) == 0
    y = sp.Symbol("y")
    # frozen from the sympy oracle
    assert puiseux_residue(3 * y**2 + y**3) == 0
    assert puiseux_residue(sp.sqrt(y), 2) == 0


def test_insufficient_truncation():
    # y^-3 + O(y^-2): the ratio is only exact below y^-3
    u = PuiseuxSeries(1, -3, (Fraction(1),), -2)
    with pytest.raises(InsufficientTruncation, match="insufficient truncation"):
        log_derivative_residue(u)
    with pytest.raises(ValueError):
        log_derivative_residue(PuiseuxSeries(1, 0, (), 4))


def test_residue_obstruction_random_trials():
    rng = random.Random(2024)
    for _ in range(200):
        m = rng.randint(1, 4)
        v = rng.randint(-3 * m, 3 * m)
        cs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(T)]
        cs[0] = cs[0] or Fraction(1)
        assert log_derivative_residue(PuiseuxSeries(m, v, tuple(cs), v + T)) == 0


@settings(max_examples=30, deadline=None)
@given(series(), series(), series())
def test_leibniz(dy, u, w):
    delta = PuiseuxDerivation(dy=dy)
    lhs = apply_derivation(delta, u * w)
    rhs = apply_derivation(delta, u) * w + u * apply_derivation(delta, w)
    assert lhs.agrees_with(rhs)


@settings(max_examples=50, deadline=None)
@given(series())
def test_log_derivative_splits_into_exponent_part(u):
    # delta(u)/u minus the termwise exponent sum times dy/u has nonnegative valuation
    ratio = apply_derivation(PuiseuxDerivation(dy=u), u) * u.invert()
    assert ratio.agrees_with(u.derivative())
    tail = ratio - u.derivative()
    assert tail.is_zero() or tail.valuation >= 0


def test_coefficient_derivative_hook():
    u = PuiseuxSeries.from_terms({0: 2, 1: 3}, 1, 6)
    delta = PuiseuxDerivation(dy=PuiseuxSeries(1, 0, (), 10), coefficient_derivative=lambda c: c * 2)
    assert apply_derivation(delta, u).agrees_with(u.scale(2))
