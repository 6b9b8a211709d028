"""Simple algebraic extensions K[g]/(m(g)) of a base field K.

K is Q or Q(c).  The modulus must be irreducible over K; elements are
reduced polynomials in the generator.  Used for roots of unity (affine
stabilizers) and for square roots of residues (log-derivative witnesses).
"""

from fractions import Fraction

from .poly import ONE, VAR_RANK, Poly, gcdex, is_scalar, rank_of


class ExtField:
    __slots__ = ("modulus", "name")

    def __init__(self, modulus, name=None):
        name = name or modulus.var
        if modulus.var != name:
            modulus = Poly(modulus.coeffs, name)
        if modulus.degree < 1:
            raise ValueError("extension modulus must be nonconstant")
        self.modulus = modulus.monic()
        self.name = name

    @property
    def degree(self):
        return self.modulus.degree

    def gen(self):
        return AlgElem(self, Poly.gen(self.name))

    def __call__(self, value):
        if isinstance(value, AlgElem) and value.field == self:
            return value
        if isinstance(value, Poly) and value.var == self.name:
            return AlgElem(self, value)
        return AlgElem(self, Poly((value,), self.name))

    def __eq__(self, other):
        return isinstance(other, ExtField) and self.name == other.name and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.name, self.modulus))

    def __repr__(self):
        return f"ExtField({self.modulus})"


class AlgElem:
    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        if rep.degree >= field.degree:
            rep = rep % field.modulus
        self.field = field
        self.rep = rep

    @property
    def rank(self):
        return VAR_RANK.get(self.field.name, 2)

    def demote(self):
        if self.rep.degree <= 0:
            return self.rep.coeffs[0] if self.rep.coeffs else Fraction(0)
        return self

    def _lift(self, other):
        if isinstance(other, AlgElem):
            if other.field == self.field:
                return other
            return None
        if is_scalar(other) or rank_of(other) < self.rank:
            return AlgElem(self.field, Poly((other,), self.field.name))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.field, self.rep + o.rep)

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.field, -self.rep)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.field, self.rep - o.rep)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.field, o.rep - self.rep)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.field, self.rep * o.rep)

    __rmul__ = __mul__

    def inverse(self):
        if self.rep.is_zero():
            raise ZeroDivisionError("division by zero in algebraic extension")
        s, _, g = gcdex(self.rep, self.field.modulus)
        if g.degree != 0:
            raise ArithmeticError("extension modulus is reducible")
        return AlgElem(self.field, s)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = AlgElem(self.field, Poly((ONE,), self.field.name))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.rep == o.rep

    def __hash__(self):
        d = self.demote()
        if d is not self:
            return hash(d)
        return hash((self.field, self.rep))

    def __bool__(self):
        return not self.rep.is_zero()

    def __repr__(self):
        return f"AlgElem({self.rep} mod {self.field.modulus})"

    def __str__(self):
        from .printing import format_poly
        return format_poly(self.rep)

