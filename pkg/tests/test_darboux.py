import warnings
from fractions import Fraction

import pytest
import sympy as sp

from poizat.algebra import Poly, RatFunc
from poizat.algebra.bipoly import BiPoly, exquo
from poizat.darboux import (
    IncompleteSearchWarning,
    as_polynomial_field,
    clear_denominators,
    darboux_polynomials,
    darboux_search,
    jouanolou_report,
    jouanolou_thresholds,
    odani_check,
    tau,
)
from poizat.expr import parse_vector_field
from poizat.forms import derivation_from_poizat
from oracles import jouanolou, linear_field_lines

X, Y = BiPoly.x(), BiPoly.y()
z = RatFunc.gen("z")


def field(p, q):
    return as_polynomial_field(parse_vector_field(p, q))


def as_dict(pairs):
    return {str(p.invariant): str(p.cofactor) for p in pairs}


def test_poizat_cleared_field():
    assert as_dict(darboux_polynomials(parse_vector_field("x*y", "y"), 3)) == {"x": "y", "y": "1"}


def test_demina_field_has_no_curves():
    assert darboux_polynomials(parse_vector_field("1", "x*y + 1"), 4) == []


def test_rotation_field():
    assert as_dict(darboux_polynomials(parse_vector_field("y", "-x"), 2)) == {"x^2 + y^2": "0"}


def test_linear_field_lines_match_oracle():
    pairs = darboux_polynomials(parse_vector_field("x", "y"), 1)
    # every line through the origin is invariant; the search reports a basis plus the +- combinations
    assert {str(p.invariant) for p in pairs} == {"x", "y", "x + y", "x - y"}
    # frozen from the sympy oracle: every line through the origin has cofactor 1
    assert linear_field_lines() == [1, 1, 1, 1]
    assert all(p.cofactor == 1 for p in pairs)


def test_pairs_reverify_and_multiply():
    P, Q = field("x*y", "y")
    pairs = darboux_polynomials((P, Q), 3)
    for p in pairs:
        assert tau(P, Q, p.invariant) == p.cofactor * p.invariant
    for a in pairs:
        for b in pairs:
            prod = a.invariant * b.invariant
            assert tau(P, Q, prod) == (a.cofactor + b.cofactor) * prod


def test_clear_denominators_examples():
    c = clear_denominators(parse_vector_field("y", "y/x"))
    assert c.field == (X * Y, Y) and c.multiplier == X
    c = clear_denominators(parse_vector_field("x^2", "y"))
    assert c.multiplier == 1
    c = clear_denominators(parse_vector_field("1/x", "1/y"))
    assert c.field == (Y, X) and c.multiplier == X * Y
    assert "does not preserve" in c.note


def test_rational_field_rejected():
    with pytest.raises(ValueError, match="clear denominators first"):
        darboux_polynomials(parse_vector_field("y", "y/x"), 2)


@pytest.mark.parametrize("f", [1 / z, 2 / (z * z - 1), 1 / (z * z - 1), 1 / (z - 1) + z])
def test_poizat_invariants_sit_on_pole_lines(f):
    D = derivation_from_poizat(f)
    cleared = clear_denominators((D.dx_image, D.dy_image))
    pairs = darboux_polynomials(cleared.field, 2)
    assert pairs
    for p in pairs:
        divides_multiplier = not cleared.multiplier.is_constant() and _divides(p.invariant, cleared.multiplier)
        assert divides_multiplier or p.invariant == Y


def _divides(a, b):
    try:
        exquo(b, a)
        return True
    except ArithmeticError:
        return False


def test_odani():
    x = Poly.gen("x")
    assert odani_check(x * x, x) == "no-invariant-curves"
    assert odani_check(Poly((), "x"), x) == "inapplicable"
    assert odani_check(x, x.scale(Fraction(2))) == "inapplicable"


def test_jouanolou_thresholds_match_oracle():
    for d in range(0, 6):
        expected = tuple(int(v) for v in jouanolou(d))
        assert jouanolou_thresholds(d) == expected
    assert jouanolou_thresholds(2, 3) == (int(sp.binomial(4, 3)) + 1, int(sp.binomial(4, 3)) + 3)


def test_jouanolou_reports():
    r = jouanolou_report(parse_vector_field("x", "y"), 1)
    assert r.darboux_threshold == 2 and r.darboux_integral_implied
    r = jouanolou_report(parse_vector_field("x*y", "y"), 2)
    assert r.curve_count_found == 2 and r.darboux_threshold == 4 and not r.darboux_integral_implied
    r = jouanolou_report(parse_vector_field("1", "x*y + 1"), 2)
    assert r.curve_count_found == 0 and not r.rational_integral_implied


def test_search_notes_surface_as_warnings():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        pairs = darboux_polynomials(parse_vector_field("x*y", "y"), 2)
    notes = darboux_search(parse_vector_field("x*y", "y"), 2).warnings
    assert len([w for w in caught if issubclass(w.category, IncompleteSearchWarning)]) == len(notes)
    assert pairs
