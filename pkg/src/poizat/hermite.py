"""Hermite reduction, residue structure and the logarithmic-derivative test.

Everything here works over Q and over the parameter field Q(c) without
factoring the denominator.
"""

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .algebra import (
    ExtField,
    Poly,
    RatFunc,
    as_ratfunc,
    poly_gcd,
    resultant,
    solve_bezout,
    squarefree_decompose,
)
from .algebra.factor import factor_rational, is_rational_square, rational_sqrt
from .algebra.linalg import rref
from .algebra.poly import ONE, ZERO


@dataclass(frozen=True)
class HermiteDecomposition:
    rational_part: RatFunc
    log_part: RatFunc


@dataclass(frozen=True)
class ResidueProfile:
    rt_resultant: Poly
    nonzero_residue_count: int
    all_poles_simple: bool


@dataclass(frozen=True)
class LogDerivativeResult:
    """Outcome of the test f = c1 * u'/u.

    status is "yes", "no" or "unknown".  On "yes", c1 and u are exact; they
    may live in a quadratic extension, recorded in ``extension`` (generator q
    with q^2 = extension.modulus root).
    """

    status: str
    c1: object = None
    u: RatFunc = None
    reason: str = ""
    extension: ExtField = None
    warnings: tuple = field(default_factory=tuple)

    def __bool__(self):
        return self.status == "yes"


def hermite_reduce(f):
    """Split f = h' + r with r proper and den(r) squarefree (Mack's linear variant)."""
    f = as_ratfunc(f)
    poly_part, A = divmod(f.num, f.den)
    rational = RatFunc(poly_part.integral())
    D = f.den
    d_minus = poly_gcd(D, D.derivative())
    d_star = D.exquo(d_minus)
    while d_minus.degree > 0:
        d_minus2 = poly_gcd(d_minus, d_minus.derivative())
        d_minus_star = d_minus.exquo(d_minus2)
        B, C = solve_bezout(-(d_star * d_minus.derivative()).exquo(d_minus), d_minus_star, A)
        A = C - B.derivative() * d_star.exquo(d_minus_star)
        rational = rational + RatFunc(B, d_minus)
        d_minus = d_minus2
    q, A = divmod(A, d_star)
    if not q.is_zero():
        rational = rational + RatFunc(q.integral())
    return HermiteDecomposition(rational, RatFunc(A, d_star))


def is_exact_derivative(f):
    return hermite_reduce(f).log_part.is_zero()


def rational_antiderivative(f):
    """g with g' = f and zero constant term in its polynomial part, or None."""
    h = hermite_reduce(f)
    return h.rational_part if h.log_part.is_zero() else None


def rt_resultant(log_part):
    """Monic res_z(D, N - t*D') for a proper N/D with squarefree D."""
    N, D = log_part.num, log_part.den
    if D.degree == 0:
        return Poly((ONE,), "t")
    t = Poly.gen("t")
    R = resultant(D, N - t * D.derivative())
    if not isinstance(R, Poly):
        R = Poly((R,), "t")
    return R.monic()


def residue_profile(f):
    h = hermite_reduce(f)
    lp = h.log_part
    count = lp.den.degree - poly_gcd(lp.num, lp.den).degree if not lp.is_zero() else 0
    return ResidueProfile(rt_resultant(lp), count, h.rational_part.den.degree == 0)


def nonzero_residue_count(f):
    return residue_profile(f).nonzero_residue_count


# -- logarithmic derivative test ----------------------------------------------

def _is_parametric(f):
    return any(isinstance(c, RatFunc) for c in f.num.coeffs + f.den.coeffs)


def _all_rational(poly):
    return all(isinstance(c, Fraction) for c in poly.coeffs)


def _split_over_q(poly):
    """Rational roots with multiplicity if poly splits into linear factors over Q."""
    roots = []
    for fac, mult in factor_rational(poly):
        if fac.degree != 1:
            return None
        roots.extend([-fac.coeffs[0]] * mult)
    return roots


def _sqrt_in_field(mu):
    """Square root of mu inside its own field (Q or Q(c)), or None."""
    if isinstance(mu, Fraction):
        return rational_sqrt(mu) if is_rational_square(mu) else None
    roots = []
    for part in (mu.num, mu.den):
        r = Poly((ONE,), "c")
        for fac, mult in squarefree_decompose(part):
            if mult % 2:
                return None
            r = r * fac ** (mult // 2)
        roots.append(r)
    lead = mu.num.lc  # den is monic
    if not is_rational_square(lead):
        return None
    return RatFunc(roots[0], roots[1]) * rational_sqrt(lead)


def _graeffe(R):
    """Monic polynomial whose roots are the squares of the roots of R."""
    n = R.degree
    neg = Poly([c if k % 2 == 0 else -c for k, c in enumerate(R.coeffs)], R.var)
    prod = R * neg
    if n % 2:
        prod = -prod
    return Poly(prod.coeffs[0::2], R.var)


def _scaled(P, s):
    """Monic polynomial with roots r/s for the roots r of P."""
    n = P.degree
    return Poly([c * s ** k for k, c in enumerate(P.coeffs)], P.var).monic() if n >= 0 else P


def _log_derivative_exact(f):
    """Exact decision over the coefficient field of f (Q or Q(c))."""
    if f.is_zero():
        return LogDerivativeResult("no", reason="zero function")
    h = hermite_reduce(f)
    if not h.rational_part.is_zero():
        return LogDerivativeResult("no", reason="pole of order at least two or a polynomial part")
    N, D = f.num, f.den
    n = D.degree
    R = rt_resultant(f)
    p1 = -R.coeff(n - 1)
    ext = None
    if p1 != 0:
        S = _scaled(R, p1)
        if not _all_rational(S):
            return LogDerivativeResult("no", reason="residue ratios vary with the parameter")
        roots = _split_over_q(S)
        if roots is None:
            return LogDerivativeResult("no", reason="residue ratios are not all rational")
        lam = p1
        candidates = sorted(set(roots))
    else:
        p2 = -2 * R.coeff(n - 2) if n >= 2 else ZERO
        if p2 == 0:
            return LogDerivativeResult("no", reason="residues sum to zero with vanishing second power sum")
        W = _scaled(_graeffe(R), p2)
        if not _all_rational(W):
            return LogDerivativeResult("no", reason="residue ratios vary with the parameter")
        ws = _split_over_q(W)
        if ws is None or any(w <= 0 for w in ws):
            return LogDerivativeResult("no", reason="residue ratios are not all rational")
        w1 = max(ws)
        sigmas = set()
        for w in set(ws):
            r = w / w1
            if not is_rational_square(r):
                return LogDerivativeResult("no", reason="residue ratios are not all rational")
            sigmas.add(rational_sqrt(r))
        mu = p2 * w1
        lam = _sqrt_in_field(mu)
        if lam is None:
            ext = ExtField(Poly((-mu, ZERO, ONE), "q"))
            lam = ext.gen()
        candidates = sorted({s for s in sigmas} | {-s for s in sigmas})
    dD = D.derivative()
    factors = []
    total = 0
    for q in candidates:
        g = poly_gcd(D, N - (lam * q) * dD)
        if g.degree > 0:
            factors.append((q, g))
            total += g.degree
    if total != n:
        return LogDerivativeResult("unknown", reason="residue candidates do not account for every pole")
    lcm = 1
    for q, _ in factors:
        lcm = lcm * q.denominator // math.gcd(lcm, q.denominator)
    ks = [int(q * lcm) for q, _ in factors]
    g = 0
    for k in ks:
        g = math.gcd(g, k)
    ks = [k // g for k in ks]
    c1 = lam * Fraction(g, lcm)
    num = Poly((ONE,), f.var)
    den = Poly((ONE,), f.var)
    for k, (_, fac) in zip(ks, factors):
        if k > 0:
            num = num * fac ** k
        else:
            den = den * fac ** (-k)
    u = RatFunc(num, den)
    if c1 * u.derivative() / u != f:
        return LogDerivativeResult("unknown", reason="witness failed exact verification")
    return LogDerivativeResult("yes", c1=c1, u=u, extension=ext)


def numeric_residues(f, dps=64):
    """Residues N(a)/D'(a) of a proper Q-fraction with squarefree denominator."""
    N, D = f.num, f.den
    with mpmath.workdps(dps + 20):
        cs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(D.coeffs)]
        roots = [-cs[1] / cs[0]] if D.degree == 1 else mpmath.polyroots(cs, maxsteps=400, extraprec=8 * dps)
        dD = D.derivative()

        def ev(p, x):
            acc = mpmath.mpc(0)
            for c in reversed(p.coeffs):
                acc = acc * x + mpmath.mpf(c.numerator) / c.denominator
            return acc

        return [ev(N, r) / ev(dD, r) for r in roots]


def numeric_ratios_rational(f, dps=64, max_den=10 ** 6):
    """Certify numerically that all residue ratios are rationals with small denominators.

    Returns True (certified rational), False (some ratio is clearly not such
    a rational) or None (could not decide, e.g. no convergence).
    """
    try:
        res = numeric_residues(f, dps)
    except (mpmath.libmp.NoConvergence, ZeroDivisionError):
        return None
    with mpmath.workdps(dps + 20):
        tol = mpmath.mpf(10) ** (-(dps // 2))
        base = res[0]
        for r in res[1:]:
            ratio = r / base
            if abs(mpmath.im(ratio)) > tol:
                return False
            x = mpmath.re(ratio)
            approx = Fraction(mpmath.nstr(x, dps, strip_zeros=False)).limit_denominator(max_den)
            if abs(x - mpmath.mpf(approx.numerator) / approx.denominator) > tol:
                return False
    return True


def _specialize(f, c0):
    def at(k):
        return k(c0) if isinstance(k, RatFunc) else k

    return RatFunc(f.num.map_coeffs(at), f.den.map_coeffs(at))


def _random_rational(rng):
    return Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 6))


def specialization_points(f, rng, count=3):
    """Rational values of c keeping the pole structure of f intact."""
    pts = []
    D = f.den
    tries = 0
    while len(pts) < count and tries < 50 * count:
        tries += 1
        c0 = _random_rational(rng)
        try:
            g = _specialize(f, c0)
        except ZeroDivisionError:
            continue
        if g.den.degree != D.degree or g.num.degree != f.num.degree:
            continue
        if poly_gcd(g.den, g.den.derivative()).degree != poly_gcd(D, D.derivative()).degree:
            continue
        pts.append(c0)
    return pts


def is_log_derivative_multiple(f, precision=64, seed=0):
    """Tri-state decision of f = c1 * u'/u for a constant c1 and rational u."""
    f = as_ratfunc(f)
    result = _log_derivative_exact(f)
    if result.status == "unknown":
        return result
    if _is_parametric(f):
        rng = random.Random(seed)
        pts = specialization_points(f, rng)
        if len(pts) < 3:
            return LogDerivativeResult("unknown", reason="could not find generic specializations of c")
        for c0 in pts:
            spec = _log_derivative_exact(_specialize(f, c0))
            if spec.status != result.status:
                return LogDerivativeResult(
                    "unknown",
                    reason=f"specialization c = {c0} disagrees with the generic verdict",
                    warnings=(f"generic verdict was {result.status}",),
                )
        return result
    # independent numeric route on the same question; only a conflict matters
    if result.status == "no" and f.den.degree >= 2 and f.is_proper() and is_squarefree(f.den):
        if numeric_ratios_rational(f, precision) is True:
            return LogDerivativeResult(
                "unknown", reason="numeric residue ratios look rational but the exact test said no"
            )
    return result


def is_squarefree(p):
    return poly_gcd(p, p.derivative()).degree == 0


def q_linear_disjointness(res1, res2):
    """True iff dim span(res1) + dim span(res2) = dim span(res1 + res2) over Q."""
    vecs = list(res1) + list(res2)
    if not vecs:
        return True
    width = len(vecs[0])
    if any(len(v) != width for v in vecs):
        raise ValueError("residue vectors are not expressed over a common basis")

    def dim(vs):
        return len(rref(vs, width)[1]) if vs else 0

    return dim(list(res1)) + dim(list(res2)) == dim(vecs)
