from hypothesis import given, settings
from hypothesis import strategies as st

from poizat.algebra import Poly, RatFunc
from poizat.forms import (
    DifferentialForm,
    PlanarDerivation,
    bivariate,
    check_invariant_volume,
    derivation_from_poizat,
    dx,
    dy,
    exterior_d,
    from_univariate,
    interior_product,
    lie_derivative,
    volume,
    wedge,
    x_gen,
    y_gen,
)
from oracles import lie_of_area, wedge_example
from strategies import polys, ratfuncs

x, y = x_gen(), y_gen()
z = RatFunc.gen("z")


@st.composite
def functions(draw):
    """Random element of Q(x)(y) of low degree in both variables."""
    parts = draw(st.lists(ratfuncs(1, "x"), min_size=1, max_size=2))
    num = sum((bivariate(p) * y ** k for k, p in enumerate(parts)), bivariate(0))
    den_shift = draw(polys(1, "x"))
    den = y + bivariate(RatFunc(den_shift)) if draw(st.booleans()) else bivariate(1)
    return num / den


@st.composite
def forms(draw, degree=None):
    deg = draw(st.sampled_from([0, 1, 2])) if degree is None else degree
    size = 2 if deg == 1 else 1
    return DifferentialForm(deg, tuple(draw(functions()) for _ in range(size)))


@st.composite
def derivations(draw):
    return PlanarDerivation(draw(functions()), draw(functions()))


def test_wedge_examples():
    assert wedge(dx, dy) == volume
    assert wedge(dx, dx).is_zero()
    w = wedge(DifferentialForm.one_form(x, y), dx)
    # frozen from the sympy oracle
    assert str(wedge_example()) == "-y"
    assert w == DifferentialForm.two_form(-y)


def test_exterior_d_examples():
    assert exterior_d(DifferentialForm.function(x * y)) == DifferentialForm.one_form(y, x)
    assert exterior_d(DifferentialForm.two_form(-1 / y)).is_zero()


def test_interior_examples():
    P, Q = x * x + 1, x * y
    D = PlanarDerivation(P, Q)
    assert interior_product(D, volume) == DifferentialForm.one_form(-Q, P)
    Df = derivation_from_poizat(1 / z)
    assert interior_product(Df, dx) == DifferentialForm.function(y)
    assert interior_product(D, DifferentialForm.function(0)).is_zero()


def test_poizat_derivations():
    D = derivation_from_poizat(1 / z)
    assert D.dx_image == y and D.dy_image == y / x
    assert derivation_from_poizat(RatFunc(Poly(()))).dy_image.is_zero()
    assert derivation_from_poizat(z).dy_image == x * y


def test_volume_examples():
    assert check_invariant_volume(1 / z)
    assert check_invariant_volume((z ** 5 - 3) / (z * z + 1))
    assert not check_invariant_volume(1 / z, volume)
    # frozen from the sympy oracle: the plain area changes at rate f(x)
    assert str(lie_of_area(1 / __import__("sympy").Symbol("x"))) == "1/x"
    assert lie_derivative(derivation_from_poizat(1 / z), volume) == DifferentialForm.two_form(1 / x)


def test_lie_on_functions_is_the_derivation():
    D = PlanarDerivation(x * y, y + 1)
    h = x * x / y
    assert lie_derivative(D, DifferentialForm.function(h)) == DifferentialForm.function(D(h))


@settings(max_examples=60, deadline=None)
@given(forms(0))
def test_dd_zero_on_functions(w):
    assert exterior_d(exterior_d(w)).is_zero()


@settings(max_examples=60, deadline=None)
@given(forms(1))
def test_dd_zero_on_one_forms(w):
    assert exterior_d(exterior_d(w)).is_zero()


@settings(max_examples=12, deadline=None)
@given(derivations(), functions(), forms())
def test_lie_of_scaled_form(D, h, w):
    lhs = lie_derivative(D, w.scale(h))
    assert lhs == lie_derivative(D, w).scale(h) + w.scale(D(h))


@settings(max_examples=10, deadline=None)
@given(derivations(), forms(1), forms(1))
def test_lie_is_a_derivation_of_wedge(D, a, b):
    lhs = lie_derivative(D, wedge(a, b))
    assert lhs == wedge(lie_derivative(D, a), b) + wedge(a, lie_derivative(D, b))


@settings(max_examples=12, deadline=None)
@given(derivations(), st.one_of(forms(0), forms(1)))
def test_lie_commutes_with_d(D, w):
    assert lie_derivative(D, exterior_d(w)) == exterior_d(lie_derivative(D, w))


@settings(max_examples=12, deadline=None)
@given(derivations(), functions(), st.one_of(forms(1), forms(2)))
def test_lie_along_scaled_derivation(D, h, w):
    lhs = lie_derivative(D.scale(h), w)
    rhs = lie_derivative(D, w).scale(h) + wedge(exterior_d(DifferentialForm.function(h)), interior_product(D, w))
    assert lhs == rhs


@settings(max_examples=12, deadline=None)
@given(derivations(), forms(1), forms(1))
def test_interior_antiderivation(D, a, b):
    lhs = interior_product(D, wedge(a, b))
    rhs = wedge(interior_product(D, a), b) - wedge(a, interior_product(D, b))
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(ratfuncs(3))
def test_invariant_volume_universal(f):
    assert check_invariant_volume(f)
    assert check_invariant_volume(f, volume) == f.is_zero()
