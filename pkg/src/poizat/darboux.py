"""Darboux polynomials of planar polynomial vector fields.

For tau = P d/dx + Q d/dy of degree d, a Darboux polynomial F satisfies
tau(F) = K F with a cofactor K of degree at most d - 1.  The search fixes
K first and then solves a linear system for F:

* the top homogeneous part of F is a product of Q-irreducible factors of
  x*Q_d - y*P_d, which pins down the top part of K;
* the lower parts of K are read off stratum by stratum, falling back to a
  one-parameter pencil determinant for the constant term of K;
* for each resulting K the kernel of F -> tau(F) - K F is factored.

Completeness holds up to the degree bound, except where a warning says
otherwise.
"""

import itertools
import math
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import sympy

from .algebra import Poly, RatFunc, poly_gcd
from .algebra.bipoly import BiPoly, exquo, factor_bivariate, gcd, lcm
from .algebra.factor import rational_roots
from .algebra.linalg import determinant, nullspace, solve_affine
from .expr import PlanarVectorField

CLEARING_CAVEAT = (
    "multiplying the field by a polynomial keeps the invariant curves but does not "
    "preserve the model-theoretic properties of the original equation"
)


class IncompleteSearchWarning(UserWarning):
    pass


@dataclass(frozen=True)
class DarbouxPair:
    invariant: BiPoly
    cofactor: BiPoly

    def verify(self, P, Q):
        return tau(P, Q, self.invariant) == self.cofactor * self.invariant


@dataclass(frozen=True)
class JouanolouReport:
    curve_count_found: int
    degree_bound_searched: int
    darboux_threshold: int
    rational_threshold: int
    field_degree: int
    darboux_integral_implied: bool
    rational_integral_implied: bool
    invariants: tuple = ()


@dataclass
class DarbouxSearch:
    pairs: list
    warnings: list = field(default_factory=list)


class ClearedField(NamedTuple):
    field: tuple
    multiplier: BiPoly
    note: str


# -- conversions ------------------------------------------------------------

def _poly_x_to_bipoly(p, j=0):
    return BiPoly({(i, j): c for i, c in enumerate(p.coeffs)})


def _poly_y_over_qx(p):
    """Poly in y with Q(x) coefficients -> (BiPoly numerator, Poly-x denominator)."""
    L = Poly((Fraction(1),), "x")
    pieces = []
    for c in p.coeffs:
        if isinstance(c, RatFunc):
            num, den = c.num, c.den
        else:
            num, den = Poly((c,), "x"), Poly((Fraction(1),), "x")
        pieces.append((num, den))
        L = (L * den).exquo(poly_gcd(L, den))
    out = BiPoly()
    for j, (num, den) in enumerate(pieces):
        out = out + _poly_x_to_bipoly(num * L.exquo(den), j)
    return out, _poly_x_to_bipoly(L)


def bivariate_fraction(h):
    """Q(x)(y) element -> reduced (numerator, denominator) BiPolys."""
    if isinstance(h, BiPoly):
        return h, BiPoly.const(1)
    if not isinstance(h, RatFunc):
        return BiPoly.const(h), BiPoly.const(1)
    if h.var != "y":
        h = RatFunc.const(h, "y") if h.var == "x" else h
    n_bi, n_l = _poly_y_over_qx(h.num)
    d_bi, d_l = _poly_y_over_qx(h.den)
    num, den = n_bi * d_l, d_bi * n_l
    g = gcd(num, den)
    num, den = exquo(num, g), exquo(den, g)
    lc = den.terms[den.leading_monomial()]
    return num * (1 / lc), den * (1 / lc)


def as_polynomial_field(V):
    if isinstance(V, PlanarVectorField):
        V = (V.P, V.Q)
    out = []
    for comp in V:
        num, den = bivariate_fraction(comp)
        if not den.is_constant():
            raise ValueError("clear denominators first: the vector field has rational components")
        out.append(num * (1 / den.coeff(0, 0)))
    return tuple(out)


def clear_denominators(V):
    if isinstance(V, PlanarVectorField):
        V = (V.P, V.Q)
    fracs = [bivariate_fraction(c) for c in V]
    m = lcm(fracs[0][1], fracs[1][1])
    polys = tuple(exquo(num * m, den) for num, den in fracs)
    return ClearedField(polys, m, CLEARING_CAVEAT)


# -- the search ---------------------------------------------------------------

def tau(P, Q, F):
    return P * F.dx() + Q * F.dy()


def _monomials(m, homogeneous=False):
    degs = [m] if homogeneous else range(m, -1, -1)
    return [(i, k - i) for k in degs for i in range(k, -1, -1)]


def _columns(P, Q, K, monos):
    return [tau(P, Q, BiPoly({mo: 1})) - K * BiPoly({mo: 1}) for mo in monos]


def _rows(cols, keep=None):
    support = sorted({t for c in cols for t in c.terms if keep is None or keep(t)})
    return [[c.coeff(*t) for c in cols] for t in support]


def _vec_to_poly(vec, monos):
    return BiPoly({mo: v for mo, v in zip(monos, vec) if v})


def _top_cofactors(P, Q, d, m):
    Pd, Qd = P.homogeneous_part(d), Q.homogeneous_part(d)
    X, Y = BiPoly.x(), BiPoly.y()
    C = X * Qd - Y * Pd
    if C.is_zero():
        R = exquo(Pd, X) if not Pd.is_zero() else exquo(Qd, Y)
        return [R * m]
    facs = [phi for phi, _ in factor_bivariate(C)]
    cofs = [exquo(Pd * phi.dx() + Qd * phi.dy(), phi) for phi in facs]
    degs = [phi.degree for phi in facs]
    found = {}
    ranges = [range(m // dg + 1) for dg in degs]
    for exps in itertools.product(*ranges):
        if sum(e * dg for e, dg in zip(exps, degs)) != m:
            continue
        K = BiPoly()
        for e, c in zip(exps, cofs):
            K = K + c * e
        found.setdefault(K, None)
    return list(found)


def _interpolate(values):
    """Polynomial in t through (k, values[k]) for k = 0..len-1."""
    t = Poly.gen("t")
    total = Poly((), "t")
    n = len(values)
    for k, v in enumerate(values):
        if v == 0:
            continue
        term = Poly((Fraction(v),), "t")
        for l in range(n):
            if l != k:
                term = term * (t - l) * Fraction(1, k - l)
        total = total + term
    return total


def _pencil_constants(P, Q, K_fixed, monos, rng):
    """Rational k with ker(F -> tau F - (K_fixed + k) F) nontrivial, or None if undetermined."""
    A = _columns(P, Q, K_fixed, monos)
    B = [BiPoly({mo: 1}) for mo in monos]
    support = sorted({t for c in A + B for t in c.terms})
    Am = [[c.coeff(*s) for c in A] for s in support]
    Bm = [[c.coeff(*s) for c in B] for s in support]
    n = len(monos)
    for _ in range(3):
        R = [[rng.randint(-9, 9) for _ in support] for _ in range(n)]
        RA = [[sum(r[s] * Am[s][j] for s in range(len(support))) for j in range(n)] for r in R]
        RB = [[sum(r[s] * Bm[s][j] for s in range(len(support))) for j in range(n)] for r in R]
        vals = [
            determinant([[RA[i][j] - k * RB[i][j] for j in range(n)] for i in range(n)]) for k in range(n + 1)
        ]
        poly = _interpolate(vals)
        if not poly.is_zero():
            return rational_roots(poly)
    return None


def _solve_lower_parts(P, Q, d, m, K_top, F_top):
    """Fix K's homogeneous parts of degree d-2 .. 1 stratum by stratum; None if inconsistent."""
    low_monos = _monomials(m - 1) if m >= 1 else []
    K_known = K_top
    for t in range(1, d - 1):
        kdeg = d - 1 - t
        k_monos = _monomials(kdeg, homogeneous=True)
        floor = m + d - 1 - t
        const = tau(P, Q, F_top) - K_known * F_top
        f_cols = _columns(P, Q, K_known, low_monos)
        k_cols = [-(BiPoly({mo: 1}) * F_top) for mo in k_monos]
        cols = f_cols + k_cols
        support = sorted({s for c in cols + [const] for s in c.terms if sum(s) >= floor})
        rows = [[c.coeff(*s) for c in cols] for s in support]
        rhs = [-const.coeff(*s) for s in support]
        sol, kernel = solve_affine(rows, rhs, len(cols))
        if sol is None:
            return None
        nf = len(low_monos)
        if any(any(v[nf:]) for v in kernel):
            return "ambiguous"
        K_known = K_known + _vec_to_poly(sol[nf:], k_monos)
    return K_known


def _solve_lower_polynomial(P, Q, d, m, K_top, F_top, notes):
    """Fallback when the strata leave K ambiguous: solve the bilinear system directly.

    Unknowns are the coefficients of F below degree m and of K below degree
    d - 1; only rational cofactors are kept.
    """
    low_monos = _monomials(m - 1)
    k_monos = _monomials(d - 2)
    fs = sympy.symbols(f"f0:{len(low_monos)}")
    ks = sympy.symbols(f"k0:{len(k_monos)}")
    x, y = sympy.symbols("x y")
    F = F_top.to_sympy().as_expr() + sum(c * x ** i * y ** j for c, (i, j) in zip(fs, low_monos))
    K = K_top.to_sympy().as_expr() + sum(c * x ** i * y ** j for c, (i, j) in zip(ks, k_monos))
    expr = sympy.expand(P.to_sympy().as_expr() * sympy.diff(F, x) + Q.to_sympy().as_expr() * sympy.diff(F, y) - K * F)
    eqs = sympy.Poly(expr, x, y).coeffs()
    out = []
    for sol in sympy.solve(eqs, list(fs) + list(ks), dict=True):
        vals = [sol.get(k, k) for k in ks]
        if any(not v.is_Rational for v in vals):
            if any(v.free_symbols for v in vals):
                notes.append(f"incomplete: a family of cofactors at degree {m} was skipped")
            continue
        low = BiPoly({mo: Fraction(int(v.p), int(v.q)) for mo, v in zip(k_monos, vals)})
        out.append(K_top + low)
    return out


def _kernel_polys(P, Q, K, m):
    monos = _monomials(m)
    if K.is_zero():
        monos = [mo for mo in monos if mo != (0, 0)]
    cols = _columns(P, Q, K, monos)
    rows = _rows(cols)
    basis = [_vec_to_poly(v, monos) for v in nullspace(rows, len(monos))]
    if 2 <= len(basis) <= 4:
        # a pencil of invariants: also try simple combinations of the basis
        pairs = list(itertools.combinations(basis, 2))
        basis += [a + b for a, b in pairs] + [a - b for a, b in pairs]
    return basis


def _cofactor_candidates(P, Q, d, m, rng, notes):
    if d == 0:
        return [BiPoly()]
    out = []
    for K_top in _top_cofactors(P, Q, d, m):
        if d == 1:
            out.append(K_top)
            continue
        if d == 2:
            ks = _pencil_constants(P, Q, K_top, _monomials(m), rng)
            if ks is None:
                notes.append(f"incomplete: cofactor constant undetermined at degree {m}")
                continue
            out.extend(K_top + k for k in ks)
            continue
        Hm_cols = _columns(P.homogeneous_part(d), Q.homogeneous_part(d), K_top, _monomials(m, True))
        tops = [_vec_to_poly(v, _monomials(m, True)) for v in nullspace(_rows(Hm_cols), m + 1)]
        if len(tops) > 1:
            notes.append(f"incomplete: top part not unique at degree {m}; basis elements tried")
        for F_top in tops:
            K = _solve_lower_parts(P, Q, d, m, K_top, F_top)
            if K is None:
                continue
            if K == "ambiguous":
                out.extend(_solve_lower_polynomial(P, Q, d, m, K_top, F_top, notes))
                continue
            ks = _pencil_constants(P, Q, K, _monomials(m), rng)
            if ks is None:
                notes.append(f"incomplete: cofactor constant undetermined at degree {m}")
                continue
            out.extend(K + k for k in ks)
    return list(dict.fromkeys(out))


def darboux_search(V, max_degree, seed=0):
    P, Q = as_polynomial_field(V)
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    d = max(P.degree, Q.degree, 0)
    rng = random.Random(seed)
    notes = []
    found = {}
    seen = set()
    for m in range(1, max_degree + 1):
        for K in _cofactor_candidates(P, Q, d, m, rng, notes):
            key = (m, K)
            if key in seen:
                continue
            seen.add(key)
            for F in _kernel_polys(P, Q, K, m):
                if F.is_constant():
                    continue
                for phi, _ in factor_bivariate(F):
                    if phi in found or phi.degree > max_degree:
                        continue
                    cof = exquo(tau(P, Q, phi), phi)
                    pair = DarbouxPair(phi, cof)
                    if not pair.verify(P, Q) or cof.degree > max(d - 1, 0):
                        raise ArithmeticError("Darboux pair failed verification")
                    found[phi] = pair
    pairs = sorted(found.values(), key=lambda p: (p.invariant.degree, str(p.invariant)))
    return DarbouxSearch(pairs, list(dict.fromkeys(notes)))


def darboux_polynomials(V, max_degree, seed=0):
    result = darboux_search(V, max_degree, seed)
    for note in result.warnings:
        warnings.warn(note, IncompleteSearchWarning, stacklevel=2)
    return result.pairs


def jouanolou_thresholds(d, n=2):
    base = math.comb(n + d - 1, n)
    return base + 1, base + n


def jouanolou_report(V, max_degree, seed=0):
    P, Q = as_polynomial_field(V)
    d = max(P.degree, Q.degree, 0)
    pairs = darboux_search((P, Q), max_degree, seed).pairs
    darb, rat = jouanolou_thresholds(d)
    k = len(pairs)
    return JouanolouReport(k, max_degree, darb, rat, d, k >= darb, k >= rat, tuple(pairs))


def odani_check(f, g):
    """Liénard x'' + f(x) x' + g(x) = 0: no invariant curves when the three hypotheses hold."""
    f = f if isinstance(f, Poly) else _as_poly(f)
    g = g if isinstance(g, Poly) else _as_poly(g)
    if f.is_zero() or g.is_zero() or f.degree < g.degree:
        return "inapplicable"
    ratio = RatFunc(g, Poly(f.coeffs, g.var))
    return "inapplicable" if ratio.is_constant() else "no-invariant-curves"


def _as_poly(v):
    if isinstance(v, RatFunc):
        if not v.is_polynomial():
            raise ValueError("Liénard coefficients must be polynomials")
        return v.num * (1 / v.den.lc)
    return Poly((Fraction(v),), "z")
