"""Factorization over Q and numeric root ordering.

Factoring is infrastructure here (delegated to sympy); everything that
consumes the factors is exact and local.
"""

from fractions import Fraction

import mpmath
import sympy

from .poly import Poly


def _to_sympy(p, sym):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], sym, domain="QQ")


def _from_sympy(sp, var):
    return Poly([Fraction(int(c.p), int(c.q)) for c in reversed(sp.all_coeffs())], var)


def factor_rational(p):
    """Monic Q-irreducible factors of p with multiplicities."""
    if p.degree < 1:
        return []
    sym = sympy.Symbol("_v")
    _, facs = _to_sympy(p, sym).factor_list()
    out = [(_from_sympy(f, p.var).monic(), m) for f, m in facs]
    out.sort(key=lambda fm: (fm[0].degree, [float(c) for c in fm[0].coeffs]))
    return out


def complex_roots(p, dps=50):
    """Numeric roots of a Q-polynomial in the documented conjugate order.

    Order: increasing argument in [0, 2*pi), ties broken by increasing modulus.
    """
    if p.degree < 1:
        return []
    with mpmath.workdps(dps):
        cs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(p.coeffs)]
        if p.degree == 1:
            roots = [-cs[1] / cs[0]]
        else:
            roots = mpmath.polyroots(cs, maxsteps=200, extraprec=4 * dps)
        tol = mpmath.mpf(10) ** (-(dps // 2))

        def key(r):
            r = mpmath.mpc(r)
            arg = mpmath.arg(r) if abs(r) > tol else mpmath.mpf(0)
            if arg < -tol:
                arg += 2 * mpmath.pi
            if abs(arg) < tol or abs(arg - 2 * mpmath.pi) < tol:
                arg = mpmath.mpf(0)
            return (float(mpmath.nstr(arg, 12)), float(abs(r)))

        return sorted((mpmath.mpc(r) for r in roots), key=key)


def rational_roots(p):
    """Distinct rational roots of a polynomial with rational coefficients."""
    return [-f.coeffs[0] for f, _ in factor_rational(p) if f.degree == 1]


def is_rational_square(q):
    q = Fraction(q)
    if q < 0:
        return False
    return _isqrt_exact(q.numerator) is not None and _isqrt_exact(q.denominator) is not None


def rational_sqrt(q):
    q = Fraction(q)
    return Fraction(_isqrt_exact(q.numerator), _isqrt_exact(q.denominator))


def _isqrt_exact(n):
    import math
    r = math.isqrt(n)
    return r if r * r == n else None
