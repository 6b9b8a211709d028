from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poizat.affine import (
    AffineMap,
    InfiniteStabilizerError,
    SimplePoleError,
    acl_profile,
    affine_stabilizer,
    affine_transporter,
    canonical_form_detect,
    relation_report,
    verify_canonical_form,
)
from poizat.algebra import Poly, RatFunc, compose_affine
from poizat.hermite import nonzero_residue_count
from strategies import nonzero_rationals, rationals, strongly_minimal_inputs

z = RatFunc.gen("z")


def pairs(maps):
    return {(m.a(), m.b()) for m in maps}


def test_stabilizer_examples():
    g = affine_stabilizer(1 / z)
    assert g.order == 1 and g.elements[0].is_identity()
    g = affine_stabilizer(2 / (z * z - 1))
    assert g.order == 2 and pairs(g.elements) == {(1, 0), (-1, 0)}
    # oracle-frozen: only the identity fixes 3z^2 + 1/z
    assert pairs(affine_stabilizer(3 * z * z + 1 / z).elements) == {(1, 0)}


def test_stabilizer_needs_a_residue():
    with pytest.raises(InfiniteStabilizerError, match="infinite or unbounded"):
        affine_stabilizer(z * z)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_rotation_sums_have_full_stabilizer(n):
    # sum over the n-th roots of unity of xi^k/(z - xi^k) equals n/(z^n - 1)
    f = n / (z ** n - 1) + z ** (2 * n) - 3 * z ** n
    g = affine_stabilizer(f)
    assert g.order == n
    assert g.angles == tuple(Fraction(j, n) for j in range(n))
    for m in g.elements:
        assert m.apply_to(f) == f


def test_transporters():
    assert pairs(affine_transporter(1 / z, 1 / (z - 1))) == {(1, 1)}
    # 1/z = 2/(2z): the residue scaling is absorbed by a = 2
    assert pairs(affine_transporter(1 / z, 2 / z)) == {(2, 0)}
    f = 2 / (z * z - 1)
    assert pairs(affine_transporter(f, f)) == pairs(affine_stabilizer(f).elements)
    assert affine_transporter(1 / z, 1 / (z * z - 1)) == []
    (m,) = affine_transporter(2 / (z * z - 1), 4 / (z * z - 2))[:1]
    assert m.a_minpoly == Poly((-2, 0, 1), "a")


def test_acl_profiles():
    assert acl_profile(1 / z).kind == "strictly_disintegrated"
    p = acl_profile(2 / (z * z - 1))
    assert (p.kind, p.k) == ("omega_categorical", 2)
    p = acl_profile(1 / (z - 1) - 1 / (z + 1) + z * z)
    assert (p.kind, p.k) == ("omega_categorical", 2)
    with pytest.raises(ValueError, match="not strongly minimal"):
        acl_profile(2 * z)


def test_canonical_form_accepts_two_poles():
    w = canonical_form_detect(2 / (z * z - 1))
    assert w.n == 2 and w.c == 1
    assert w.conjugator.a() in (1, -1) and w.conjugator.b() == 0
    assert verify_canonical_form(2 / (z * z - 1), w)


def test_canonical_form_quartic():
    f = 1 / (z ** 4 - 2) + z ** 4
    w = canonical_form_detect(f)
    assert w.n == 4 and w.c == Fraction(1, 8)
    assert w.g_poly == Poly((0, 2), "z")
    assert w.conjugator.a_minpoly == Poly((-2, 0, 0, 0, 1), "a")


def test_canonical_form_rejections():
    with pytest.raises(SimplePoleError, match="simple poles"):
        canonical_form_detect(-1 / (z - 1) + 1 / (z + 1) + 1 / (z - 2) ** 2 + 1 / (z + 2) ** 2)
    # two poles but only the identity fixes f
    assert canonical_form_detect(1 / (z - 1) + 2 / (z + 1)) is None


def test_relation_reports():
    r = relation_report(1 / z, 1 / z)
    assert r.strictly_disintegrated and [m.describe() for m in r.relations] == ["y -> y"]
    r = relation_report(1 / z, 1 / (z - 1))
    assert [m.describe() for m in r.relations] == ["y -> y + 1"]
    with pytest.raises(ValueError, match="second input is an exact derivative"):
        relation_report(1 / z, 1 / z ** 2)


def test_algebraic_map_description():
    g = affine_stabilizer(1 / (z ** 3 - 1))
    texts = [m.describe() for m in g.elements]
    assert texts[0] == "y -> y"
    assert all("a^2 + a + 1" in t for t in texts[1:])


def test_rational_map_constructor():
    assert AffineMap.rational(2, -3).describe() == "y -> 2*y - 3"
    with pytest.raises(ValueError, match="degenerate"):
        AffineMap.rational(0, 1)


@settings(max_examples=60, deadline=None)
@given(strongly_minimal_inputs())
def test_stabilizer_bounds(f):
    n = nonzero_residue_count(f)
    g = affine_stabilizer(f)
    assert g.order <= max(1, n)
    if n >= 2:
        assert g.order <= n * (n - 1)
    for m in g.elements:
        assert m.apply_to(f) == f


@settings(max_examples=40, deadline=None)
@given(strongly_minimal_inputs(), nonzero_rationals(), rationals())
def test_conjugation_covariance(f, a, b):
    h = compose_affine(f, (a, b))
    stab_f = affine_stabilizer(f)
    stab_h = affine_stabilizer(h)
    assert stab_h.order == stab_f.order
    # (s, t) fixes f  =>  tau^-1 (s, t) tau = (s, (s*b + t - b)/a) fixes h
    conj = {(s, (s * b + t - b) / a) for s, t in pairs(m for m in stab_f.elements if m.is_rational())}
    assert conj == pairs(m for m in stab_h.elements if m.is_rational())


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 4]), nonzero_rationals(), rationals())
def test_group_closure_after_conjugation(n, a, b):
    f = compose_affine(n / (z ** n - 1) + z ** n, (a, b))
    g = affine_stabilizer(f)
    assert g.order == n and g.is_cyclic
