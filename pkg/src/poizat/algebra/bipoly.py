"""Sparse bivariate polynomials over Q in (x, y), with a sympy bridge for factoring."""

from fractions import Fraction

import sympy

from .printing import format_scalar

_X, _Y = sympy.symbols("x y")


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(k == (0, 0) for k in self.terms)

    @property
    def degree(self):
        return max((i + j for i, j in self.terms), default=-1)

    def homogeneous_part(self, k):
        return BiPoly({m: c for m, c in self.terms.items() if sum(m) == k})

    def coeff(self, i, j):
        return self.terms.get((i, j), Fraction(0))

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def dx(self):
        return BiPoly({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def dy(self):
        return BiPoly({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def leading_monomial(self):
        return max(self.terms, key=lambda m: (m[0] + m[1], m[0]))

    def monic(self):
        if self.is_zero():
            return self
        lc = self.terms[self.leading_monomial()]
        return BiPoly({m: c / lc for m, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda m: (-(m[0] + m[1]), -m[0])):
            c = self.terms[(i, j)]
            mono = "*".join(
                s for s in (_pow("x", i), _pow("y", j)) if s
            )
            if not mono:
                body = format_scalar(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_scalar(abs(c))}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"BiPoly({self})"

    def __call__(self, x, y):
        return sum((c * x ** i * y ** j for (i, j), c in self.terms.items()), Fraction(0))

    # sympy bridge
    def to_sympy(self):
        return sympy.Poly.from_dict(
            {m: sympy.Rational(c.numerator, c.denominator) for m, c in self.terms.items()} or {(0, 0): 0},
            _X,
            _Y,
            domain="QQ",
        )

    @classmethod
    def from_sympy(cls, p):
        p = sympy.Poly(p, _X, _Y, domain="QQ")
        return cls({m: Fraction(int(c.p), int(c.q)) for m, c in p.terms()})


def _pow(name, k):
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


def _coerce(v):
    if isinstance(v, BiPoly):
        return v
    return BiPoly.const(v)


def exquo(a, b):
    """a / b for exact division, else ArithmeticError."""
    q, r = sympy.div(a.to_sympy(), b.to_sympy())
    if not r.is_zero:
        raise ArithmeticError("inexact bivariate division")
    return BiPoly.from_sympy(q)


def factor_bivariate(p):
    """Monic Q-irreducible nonconstant factors with multiplicities."""
    _, factors = sympy.factor_list(p.to_sympy())
    out = []
    for fac, mult in factors:
        f = BiPoly.from_sympy(fac)
        if not f.is_constant():
            out.append((f.monic(), mult))
    return out


def gcd(a, b):
    return BiPoly.from_sympy(sympy.gcd(a.to_sympy(), b.to_sympy())).monic()


def lcm(a, b):
    return BiPoly.from_sympy(sympy.lcm(a.to_sympy(), b.to_sympy())).monic()
