"""Truncated Puiseux series in y with rational coefficients.

A series with ramification m, valuation numerator v and coefficients
a_0, a_1, ... stands for sum a_i y^((v+i)/m).  It is exact for exponent
numerators below ``prec`` (an absolute bound, in units of 1/m); every
operation propagates the bound it can guarantee.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


class InsufficientTruncation(ValueError):
    pass


@dataclass(frozen=True)
class PuiseuxSeries:
    m: int
    v: int
    coeffs: tuple
    prec: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("ramification must be positive")
        width = max(self.prec - self.v, 0)
        cs = [Fraction(c) for c in self.coeffs[:width]]
        cs += [Fraction(0)] * (width - len(cs))
        v = self.v
        while cs and cs[0] == 0:
            cs.pop(0)
            v += 1
        if not cs:
            v = self.prec
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "v", v)

    @classmethod
    def from_terms(cls, terms, m, T):
        """terms: {exponent (Fraction or int): coefficient}; keeps T terms from the lowest exponent."""
        nums = {int(Fraction(e) * m): Fraction(c) for e, c in terms.items() if c}
        for e in terms:
            if Fraction(e) * m != int(Fraction(e) * m):
                raise ValueError("exponent not compatible with the ramification")
        if not nums:
            return cls(m, 0, (), T)
        v = min(nums)
        return cls(m, v, tuple(nums.get(v + i, 0) for i in range(T)), v + T)

    @classmethod
    def monomial(cls, exponent, m=1, T=16, coeff=1):
        return cls.from_terms({Fraction(exponent): coeff}, m, T)

    @property
    def truncation_order(self):
        return self.prec - self.v

    @property
    def valuation(self):
        return Fraction(self.v, self.m)

    def is_zero(self):
        return not self.coeffs

    def coeff_num(self, k):
        """Coefficient of y^(k/m); raises if k is beyond the exact window."""
        if k >= self.prec:
            raise InsufficientTruncation("insufficient truncation")
        if k < self.v:
            return Fraction(0)
        return self.coeffs[k - self.v]

    def coeff(self, exponent):
        e = Fraction(exponent) * self.m
        if e.denominator != 1:
            return Fraction(0)
        return self.coeff_num(int(e))

    def ramify(self, k):
        if k == 1:
            return self
        cs = [Fraction(0)] * (len(self.coeffs) * k)
        for i, c in enumerate(self.coeffs):
            cs[i * k] = c
        return PuiseuxSeries(self.m * k, self.v * k, tuple(cs), self.prec * k)

    def truncate(self, T):
        return PuiseuxSeries(self.m, self.v, self.coeffs[:T], min(self.prec, self.v + T))

    def _align(self, other):
        m = lcm(self.m, other.m)
        return self.ramify(m // self.m), other.ramify(m // other.m)

    def __add__(self, other):
        a, b = self._align(_coerce(other, self))
        prec = min(a.prec, b.prec)
        lo = min(a.v, b.v)
        cs = [a.coeff_num(k) + b.coeff_num(k) for k in range(lo, prec)]
        return PuiseuxSeries(a.m, lo, tuple(cs), prec)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries(self.m, self.v, tuple(-c for c in self.coeffs), self.prec)

    def __sub__(self, other):
        return self + (-_coerce(other, self))

    def scale(self, c):
        return PuiseuxSeries(self.m, self.v, tuple(Fraction(c) * a for a in self.coeffs), self.prec)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return self.scale(other)
        a, b = self._align(other)
        if a.is_zero() or b.is_zero():
            v = a.v + b.v
            prec = min(a.prec + (b.v if not b.is_zero() else b.prec), b.prec + (a.v if not a.is_zero() else a.prec))
            return PuiseuxSeries(a.m, v, (), prec)
        v = a.v + b.v
        prec = min(a.v + b.prec, b.v + a.prec)
        n = prec - v
        cs = [Fraction(0)] * n
        for i, x in enumerate(a.coeffs[:n]):
            if x:
                for j, y in enumerate(b.coeffs[: n - i]):
                    cs[i + j] += x * y
        return PuiseuxSeries(a.m, v, tuple(cs), prec)

    __rmul__ = __mul__

    def invert(self):
        if self.is_zero():
            raise ZeroDivisionError("cannot invert the zero series")
        a = self.coeffs
        n = len(a)
        inv0 = 1 / a[0]
        b = [inv0]
        for k in range(1, n):
            s = sum(a[i] * b[k - i] for i in range(1, k + 1))
            b.append(-inv0 * s)
        return PuiseuxSeries(self.m, -self.v, tuple(b), -self.v + n)

    def __truediv__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return self.scale(1 / Fraction(other))
        return self * other.invert()

    def derivative(self):
        """Formal d/dy: exponents drop by one."""
        cs = tuple(c * Fraction(self.v + i, self.m) for i, c in enumerate(self.coeffs))
        return PuiseuxSeries(self.m, self.v - self.m, cs, self.prec - self.m)

    def map_coeffs(self, fn):
        return PuiseuxSeries(self.m, self.v, tuple(fn(c) for c in self.coeffs), self.prec)

    def agrees_with(self, other):
        """Equality on the common exact window."""
        a, b = self._align(_coerce(other, self))
        prec = min(a.prec, b.prec)
        lo = min(a.v, b.v, prec)
        return all(a.coeff_num(k) == b.coeff_num(k) for k in range(lo, prec))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                e = Fraction(self.v + i, self.m)
                terms.append(f"{c}*y^({e})")
        terms.append(f"O(y^({Fraction(self.prec, self.m)}))")
        return " + ".join(terms)


def _coerce(value, like):
    if isinstance(value, PuiseuxSeries):
        return value
    # a constant is exact everywhere; give it a window that never limits the result
    return PuiseuxSeries(like.m, 0, (Fraction(value),), max(like.prec, 1) + like.truncation_order)


@dataclass(frozen=True)
class PuiseuxDerivation:
    """delta(sum a_i y^e_i) = sum delta(a_i) y^e_i + (d/dy sum a_i y^e_i) * dy."""

    dy: PuiseuxSeries
    coefficient_derivative: object = None  # callable on coefficients; None means constants


def apply_derivation(delta, u):
    out = u.derivative() * delta.dy
    if delta.coefficient_derivative is not None:
        out = out + u.map_coeffs(delta.coefficient_derivative)
    return out


def log_derivative_residue(u):
    """Coefficient of y^-1 in delta(u)/u for the derivation with delta(y) = u."""
    if u.is_zero():
        raise ValueError("log derivative of the zero series")
    ratio = apply_derivation(PuiseuxDerivation(dy=u), u) * u.invert()
    return ratio.coeff_num(-ratio.m)
