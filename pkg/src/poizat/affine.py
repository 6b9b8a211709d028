"""Affine symmetries of f under precomposition and transporters between two f's.

A map (a, b) acts by z -> a*z + b.  When f has a pole, comparing the
z^(d-1) coefficients of the denominators in f(z) = g(a*z + b) makes b a
linear function of a, so every solution comes from the common roots of a
handful of univariate polynomials in a.

Algebraic a are stored as (monic minimal polynomial over Q, root index).
Conjugates are ordered by argument in [0, 2*pi), then by modulus; for the
cyclotomic polynomial of order k this is the order exp(2*pi*i*j/k) with
j increasing over the residues coprime to k.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import ExtField, Poly, RatFunc, as_ratfunc, format_poly, format_value, poly_gcd
from .algebra.factor import complex_roots, factor_rational
from .algebra.poly import ONE, ZERO
from .algebra.printing import format_scalar
from .hermite import hermite_reduce, is_exact_derivative, nonzero_residue_count


class InfiniteStabilizerError(ValueError):
    pass


class SimplePoleError(ValueError):
    pass


@dataclass(frozen=True)
class AffineMap:
    a_minpoly: Poly
    a_root_index: int = 0
    b_coeffs: tuple = ()

    @classmethod
    def rational(cls, a, b):
        a, b = Fraction(a), Fraction(b)
        if a == 0:
            raise ValueError("degenerate affine map")
        return cls(Poly((-a, ONE), "a"), 0, (b,))

    @property
    def degree(self):
        return self.a_minpoly.degree

    def is_rational(self):
        return self.a_minpoly.degree == 1

    def field(self):
        return None if self.is_rational() else ExtField(self.a_minpoly)

    def a(self):
        if self.is_rational():
            return -self.a_minpoly.coeffs[0]
        return self.field().gen()

    def b(self):
        if self.is_rational():
            return Fraction(self.b_coeffs[0]) if self.b_coeffs else ZERO
        return self.field()(Poly(self.b_coeffs, "a"))

    def b_poly(self):
        return Poly(self.b_coeffs, "a")

    def is_identity(self):
        return self.is_rational() and self.a() == 1 and self.b() == 0

    def apply_to(self, f):
        """f(a*z + b), computed exactly in Q(a)."""
        return as_ratfunc(f).compose_affine(self.a(), self.b())

    def complex_a(self, dps=30):
        return complex_roots(self.a_minpoly, dps)[self.a_root_index]

    def complex_b(self, dps=30):
        a = self.complex_a(dps)
        acc = 0
        for c in reversed(self.b_coeffs):
            acc = acc * a + float(c)
        return complex(acc)

    def describe(self):
        """Human-readable action y -> a*y + b."""
        if self.is_rational():
            a, b = self.a(), self.b()
            if a == 1:
                lin = "y"
            elif a == -1:
                lin = "-y"
            else:
                lin = f"{format_scalar(a)}*y"
            if b == 0:
                return f"y -> {lin}"
            sign = "-" if b < 0 else "+"
            return f"y -> {lin} {sign} {format_scalar(abs(b))}"
        bp = self.b_poly()
        lin = "a*y" if bp.is_zero() else f"a*y + ({format_poly(bp)})"
        return f"y -> {lin} where a is root {self.a_root_index} of {format_poly(self.a_minpoly)}"

    def to_json(self):
        return {
            "a_minpoly": format_poly(self.a_minpoly),
            "a_root_index": self.a_root_index,
            "b_coeffs": [format_scalar(c) for c in self.b_coeffs] or ["0"],
        }


@dataclass(frozen=True)
class StabilizerGroup:
    elements: tuple
    order: int
    is_cyclic: bool
    generator: AffineMap = None
    angles: tuple = ()  # a = exp(2*pi*i*angle), parallel to elements


@dataclass(frozen=True)
class CanonicalFormWitness:
    """compose_affine(f, conjugator) = c * sum xi^k/(z - xi^k) + g_poly(z^n)."""

    conjugator: AffineMap
    c: object
    n: int
    g_poly: Poly
    xi_minpoly: Poly
    xi_root_index: int = 0


@dataclass(frozen=True)
class AclProfile:
    kind: str  # strictly_disintegrated | omega_categorical
    k: int


@dataclass
class RelationReport:
    f: RatFunc
    g: RatFunc
    relations: list
    strictly_disintegrated: bool = False
    statement: str = ""
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "f": format_value(self.f),
            "g": format_value(self.g),
            "direction": "solutions of the f-equation to solutions of the g-equation",
            "relations": [dict(m.to_json(), map=m.describe()) for m in self.relations],
            "strictly_disintegrated": self.strictly_disintegrated,
            "statement": self.statement,
            "notes": self.notes,
        }


# -- cyclotomic helpers ---------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic(k):
    x = Poly.gen("a")
    p = x ** k - 1
    for d in range(1, k):
        if k % d == 0:
            p = p.exquo(cyclotomic(d))
    return p


def euler_phi(k):
    return sum(1 for j in range(1, k + 1) if math.gcd(j, k) == 1)


def cyclotomic_order(m):
    """k with m = Phi_k, or None."""
    deg = m.degree
    for k in range(1, 2 * deg * deg + 3):
        if euler_phi(k) == deg and cyclotomic(k) == m:
            return k
    return None


def unit_residues(k):
    return [0] if k == 1 else [j for j in range(1, k) if math.gcd(j, k) == 1]


# -- the solver -------------------------------------------------------------

def _check_rational_input(f):
    for c in f.num.coeffs + f.den.coeffs:
        if not isinstance(c, Fraction):
            raise ValueError("affine relations are computed for rational coefficients only")


def _affine_solutions(f, g):
    """[(minpoly, b as Poly in a)] for all (a, b) with f(z) = g(a*z + b)."""
    f, g = as_ratfunc(f), as_ratfunc(g)
    _check_rational_input(f)
    _check_rational_input(g)
    if f.den.degree != g.den.degree or f.num.degree != g.num.degree:
        return []
    d = f.den.degree
    if d == 0:
        raise InfiniteStabilizerError("infinite or unbounded stabilizer not supported")
    A = Poly.gen("a")
    b = (A * f.den.coeff(d - 1) - g.den.coeff(d - 1)).scale(Fraction(1, d))
    lin = Poly((b, A), "z")  # a*z + b with coefficients in Q[a]
    scale = A ** d
    eqs = []
    for gp, fp in ((g.den, f.den), (g.num, f.num)):
        diff = gp(lin) - fp * scale
        eqs.extend(c if isinstance(c, Poly) else Poly((c,), "a") for c in diff.coeffs)
    common = Poly((), "a")
    for e in eqs:
        common = poly_gcd(common, e)
        if common.degree == 0:
            return []
    if common.is_zero():
        raise InfiniteStabilizerError("infinite or unbounded stabilizer not supported")
    while common.coeff(0) == 0:
        common = common.exquo(A)
    if common.degree < 1:
        return []
    out = []
    for m, _ in factor_rational(common):
        bm = b % m
        out.append((m, bm))
    return out


def _b_tuple(bm, m):
    return tuple(bm.coeffs) if m.degree > 1 and not bm.is_zero() else (bm.coeff(0),)


def _maps_from_solutions(sols, f, g):
    maps = []
    for m, bm in sols:
        for i in range(m.degree):
            amap = AffineMap(m, i, _b_tuple(bm, m))
            maps.append(amap)
        # Galois conjugates satisfy the same identity, so one exact check per factor
        probe = maps[-1]
        if probe.apply_to(g) != f:
            raise ArithmeticError("affine candidate failed exact verification")
    return maps


def _require_residues(f):
    if nonzero_residue_count(f) == 0:
        raise InfiniteStabilizerError("infinite or unbounded stabilizer not supported")


def affine_stabilizer(f):
    """All (a, b) with f(a*z + b) = f(z); requires a nonzero residue."""
    f = as_ratfunc(f)
    _require_residues(f)
    sols = _affine_solutions(f, f)
    elements, angles = [], []
    for m, bm in sols:
        k = cyclotomic_order(m)
        if k is None:
            raise ArithmeticError(f"stabilizer multiplier with non-cyclotomic minimal polynomial {m}")
        for i, j in enumerate(unit_residues(k)):
            elements.append(AffineMap(m, i, _b_tuple(bm, m)))
            angles.append(Fraction(j, k))
        if elements[-1].apply_to(f) != f:
            raise ArithmeticError("stabilizer candidate failed exact verification")
    order = len(elements)
    pairs = sorted(zip(angles, range(order)))
    elements = tuple(elements[i] for _, i in pairs)
    angles = tuple(a for a, _ in pairs)
    _verify_group(elements, angles)
    gen = elements[angles.index(Fraction(1, order))] if order > 1 else elements[0]
    return StabilizerGroup(elements, order, True, gen, angles)


def _cyclotomic_field(N):
    if N <= 2:
        return None, Fraction(1 if N == 1 else -1)
    E = ExtField(cyclotomic(N))
    return E, E.gen()


def _verify_group(elements, angles):
    """Closure, inverses and the cyclic structure, exactly in Q(zeta_N)."""
    order = len(elements)
    if order == 0 or angles[0] != 0 or not elements[0].is_identity():
        raise ArithmeticError("stabilizer does not contain the identity")
    expected = tuple(Fraction(j, order) for j in range(order))
    if angles != expected:
        raise ArithmeticError("stabilizer multipliers are not the full group of roots of unity of its order")
    N = order
    E, zeta = _cyclotomic_field(N)

    def embed(idx):
        e = int(angles[idx] * N)
        a = zeta ** e
        b = Poly(elements[idx].b_coeffs, "a")(a) if elements[idx].b_coeffs else ZERO
        return a, b

    emb = [embed(i) for i in range(order)]
    for i in range(order):
        a1, b1 = emb[i]
        for j in range(order):
            a2, b2 = emb[j]
            k = (int(angles[i] * N) + int(angles[j] * N)) % N
            a3, b3 = emb[k]
            if a1 * a2 != a3 or a1 * b2 + b1 != b3:
                raise ArithmeticError("stabilizer is not closed under composition")
        inv_k = (-int(angles[i] * N)) % N
        ai, bi = emb[inv_k]
        if ai * a1 != 1 or ai * b1 + bi != 0:
            raise ArithmeticError("stabilizer is not closed under inverses")


def affine_transporter(f, g):
    """All (a, b) with f(z) = g(a*z + b): a coset of the stabilizer of f, or empty."""
    f, g = as_ratfunc(f), as_ratfunc(g)
    _require_residues(f)
    _require_residues(g)
    return _maps_from_solutions(_affine_solutions(f, g), f, g)


def acl_profile(f):
    f = as_ratfunc(f)
    if is_exact_derivative(f):
        raise ValueError("not strongly minimal: f is the derivative of a rational function")
    n = nonzero_residue_count(f)
    k = affine_stabilizer(f).order
    if k > n:
        raise ArithmeticError(f"stabilizer order {k} exceeds the residue count {n}")
    if n >= 2 and k > n * (n - 1):
        raise ArithmeticError(f"stabilizer order {k} exceeds n(n-1) = {n * (n - 1)}")
    return AclProfile("strictly_disintegrated" if k == 1 else "omega_categorical", k)


def _pole_sum(n):
    """sum_k xi^k/(z - xi^k) for a primitive n-th root xi, built in Q(xi)(z)."""
    if n == 2:
        xi = Fraction(-1)
    else:
        xi = ExtField(cyclotomic(n)).gen()
    total = RatFunc(Poly((), "z"))
    for k in range(n):
        w = xi ** k if k else Fraction(1)
        total = total + RatFunc(Poly((w,), "z"), Poly((-w, ONE), "z"))
    return total


def canonical_form_detect(f):
    """Conjugate f to c*sum xi^k/(z - xi^k) + g(z^n) when |Stab(f)| = n.

    Returns None when the stabilizer is smaller than the residue count.
    Raises SimplePoleError when f has a pole of order two or more.
    """
    f = as_ratfunc(f)
    if hermite_reduce(f).rational_part.den.degree > 0:
        raise SimplePoleError("higher-order poles present: the canonical form needs simple poles only")
    n = nonzero_residue_count(f)
    if n < 2:
        return None
    stab = affine_stabilizer(f)
    if stab.order != n:
        return None
    d = f.den.degree
    z0 = -f.den.coeff(d - 1) / d  # common fixed point: the centroid of the poles
    f1 = f.compose_affine(ONE, z0)
    D1 = f1.den
    if D1 != Poly.monomial(ONE, n, "z") + D1.coeff(0):
        raise ArithmeticError("centred denominator is not of the form z^n - P")
    P = -D1.coeff(0)
    m = factor_rational(Poly.monomial(ONE, n, "a") - P)[0][0]
    conj = AffineMap(m, 0, (z0,))
    p = conj.a()
    f2 = f1.compose_affine(p, ZERO)
    D2 = f2.den
    c = f2.num(ONE) / D2.derivative()(ONE)
    rotation_sum = _pole_sum(n)
    expected_sum = RatFunc(Poly((Fraction(n),), "z"), Poly.monomial(ONE, n, "z") - 1)
    if rotation_sum != expected_sum:
        raise ArithmeticError("cyclotomic pole sum identity failed")
    rest = f2 - expected_sum * c
    if rest.den.degree != 0:
        return None
    coeffs = rest.num.coeffs
    if any(coeffs[i] != 0 for i in range(len(coeffs)) if i % n):
        return None
    g_poly = Poly(coeffs[0::n], "z")
    witness = CanonicalFormWitness(conj, c, n, g_poly, cyclotomic(n), 0)
    if not verify_canonical_form(f, witness):
        raise ArithmeticError("canonical form failed exact verification")
    return witness


def verify_canonical_form(f, w):
    lhs = w.conjugator.apply_to(f)
    z = RatFunc.gen("z")
    zn = z ** w.n
    tail = RatFunc(Poly((), "z"))
    for k, coef in enumerate(w.g_poly.coeffs):
        tail = tail + zn ** k * coef
    return lhs == _pole_sum(w.n) * w.c + tail


def relation_report(f, g):
    f, g = as_ratfunc(f), as_ratfunc(g)
    for name, h in (("first", f), ("second", g)):
        if is_exact_derivative(h):
            raise ValueError(f"{name} input is an exact derivative, so its equation is not strongly minimal")
    maps = affine_transporter(f, g)
    report = RelationReport(f, g, maps)
    if f == g:
        report.strictly_disintegrated = len(maps) == 1
    if maps:
        report.statement = (
            "each listed map sends solutions of the f-equation to solutions of the g-equation; "
            "tuples of solutions not linked by these maps are independent, derivatives included"
        )
    else:
        report.statement = "no affine map links the two equations, so their solutions are mutually independent"
    return report
