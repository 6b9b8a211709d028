"""Reduced rational functions num/den with a monic denominator.

The same class doubles as the parameter field Q(c): a RatFunc in the
variable ``c`` over Q is a field element and can serve as a coefficient of
polynomials in z.
"""

from fractions import Fraction

from .poly import ONE, ZERO, Poly, _outer, is_scalar, norm_coeff, poly_gcd, rank_of


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var=None):
        if not isinstance(num, Poly):
            num = Poly((num,), var or (den.var if isinstance(den, Poly) else "z"))
        if den is None:
            den = Poly((ONE,), num.var)
        elif not isinstance(den, Poly):
            den = Poly((den,), num.var)
        if den.var != num.var:
            if den.is_constant():
                den = Poly(den.coeffs, num.var)
            elif num.is_constant():
                num = Poly(num.coeffs, den.var)
            else:
                raise ValueError("numerator and denominator use different variables")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly((ONE,), num.var)
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exquo(g), den.exquo(g)
        lc = den.lc
        if lc != 1:
            inv = ONE / lc
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def _normalized(cls, num, den):
        """num/den already coprime: only make den monic."""
        if num.is_zero():
            return cls._raw(num, Poly((ONE,), num.var))
        lc = den.lc
        if lc != 1:
            inv = ONE / lc
            num, den = num.scale(inv), den.scale(inv)
        return cls._raw(num, den)

    @classmethod
    def gen(cls, var="z"):
        return cls(Poly.gen(var))

    @classmethod
    def const(cls, value, var="z"):
        return cls._raw(Poly((value,), var), Poly((ONE,), var))

    @property
    def var(self):
        return self.num.var

    @property
    def rank(self):
        return self.num.rank

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.den.degree == 0 and self.num.degree <= 0

    def is_proper(self):
        return self.num.degree < self.den.degree

    def demote(self):
        if self.den.degree == 0 and self.num.degree <= 0:
            return self.num.coeffs[0] if self.num.coeffs else ZERO
        return self

    def degree(self):
        return max(self.num.degree, self.den.degree)

    # -- coercion -------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.var == self.var:
                return other
            if other.rank < self.rank:
                return RatFunc.const(other, self.var)
            return None
        if isinstance(other, Poly):
            if other.var == self.var:
                return RatFunc._raw(other, Poly((ONE,), self.var))
            if other.rank < self.rank:
                return RatFunc.const(other, self.var)
            return None
        if is_scalar(other):
            return RatFunc.const(Fraction(other), self.var)
        if rank_of(other) < self.rank:
            return RatFunc.const(other, self.var)
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return other.__radd__(self) if _outer(self, other) else NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        # with coprime denominators the sum is already in lowest terms
        if self.den.degree == 0 or o.den.degree == 0:
            return RatFunc._normalized(self.num * o.den + o.num * self.den, self.den * o.den)
        g = poly_gcd(self.den, o.den)
        if g.degree == 0:
            return RatFunc._normalized(self.num * o.den + o.num * self.den, self.den * o.den)
        # only factors of the shared part g can cancel
        a, b = self.den.exquo(g), o.den.exquo(g)
        num = self.num * b + o.num * a
        h = poly_gcd(num, g)
        if h.degree > 0:
            num, g = num.exquo(h), g.exquo(h)
        return RatFunc._normalized(num, g * a * b)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return other.__rsub__(self) if _outer(self, other) else NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return other.__rmul__(self) if _outer(self, other) else NotImplemented
        if o.den.degree == 0 and o.num.degree <= 0:
            if o.num.is_zero():
                return RatFunc._raw(o.num, o.den)
            return RatFunc._raw(self.num.scale(o.num.coeffs[0]), self.den)
        if self.den.degree == 0 and o.den.degree == 0:
            return RatFunc(self.num * o.num, self.den * o.den)
        # cross-cancel so the product is already in lowest terms
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        g1, g2 = poly_gcd(n1, d2), poly_gcd(n2, d1)
        if g1.degree > 0:
            n1, d2 = n1.exquo(g1), d2.exquo(g1)
        if g2.degree > 0:
            n2, d1 = n2.exquo(g2), d1.exquo(g2)
        return RatFunc._normalized(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return other.__rtruediv__(self) if _outer(self, other) else NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("integer exponent required")
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num ** n, self.den ** n)

    def derivative(self):
        n, d = self.num, self.den
        if d.degree == 0:
            return RatFunc._raw(n.derivative(), d)
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def map_coeffs(self, fn, var=None):
        """Apply fn to every coefficient of num and den (e.g. specialize c)."""
        return RatFunc(self.num.map_coeffs(fn, var), self.den.map_coeffs(fn, var))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return norm_coeff(self.num(x) / d)

    evaluate = __call__

    def compose_affine(self, a, b):
        """f(a*z + b)."""
        if a == 0:
            raise ValueError("degenerate affine map")
        lin = Poly((b, a), self.var)
        return RatFunc(self.num(lin), self.den(lin))

    def polynomial_part(self):
        q, _ = divmod(self.num, self.den)
        return q

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.demote())
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        from .printing import format_ratfunc
        return f"RatFunc({format_ratfunc(self)})"

    def __str__(self):
        from .printing import format_ratfunc
        return format_ratfunc(self)


def as_ratfunc(v, var="z"):
    if isinstance(v, RatFunc) and v.var == var:
        return v
    if isinstance(v, Poly) and v.var == var:
        return RatFunc(v)
    return RatFunc.const(norm_coeff(v), var)


def compose_affine(f, ab):
    a, b = ab
    return as_ratfunc(f).compose_affine(a, b)


def param_field_gen():
    """The generator c of the parameter field Q(c)."""
    return RatFunc.gen("c")
