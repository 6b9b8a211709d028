"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from poizat.algebra import Poly, RatFunc


def rationals(max_num=20, max_den=6):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def nonzero_rationals(max_num=20, max_den=6):
    return rationals(max_num, max_den).filter(lambda q: q != 0)


def polys(max_degree=4, var="z", nonzero=False):
    s = st.lists(rationals(), min_size=0, max_size=max_degree + 1).map(lambda cs: Poly(cs, var))
    return s.filter(lambda p: not p.is_zero()) if nonzero else s


def ratfuncs(max_degree=3, var="z"):
    return st.builds(lambda n, d: RatFunc(n, d), polys(max_degree, var), polys(max_degree, var, nonzero=True))


@st.composite
def strongly_minimal_inputs(draw, max_poles=3):
    """f = g' + sum c_i/(z - a_i) with at least one nonzero c_i."""
    g = draw(ratfuncs(2))
    k = draw(st.integers(1, max_poles))
    poles = draw(st.lists(st.integers(-12, 12), min_size=k, max_size=k, unique=True))
    cs = draw(st.lists(rationals(), min_size=k, max_size=k))
    if all(c == 0 for c in cs):
        cs[0] = Fraction(1)
    f = g.derivative()
    for ci, ai in zip(cs, poles):
        f = f + RatFunc(Poly((ci,)), Poly((Fraction(-ai), Fraction(1))))
    return f
