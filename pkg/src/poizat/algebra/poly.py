"""Dense univariate polynomials over an exact coefficient field.

Coefficients are stored lowest degree first.  The coefficient field is
implicit: anything supporting +, -, *, / and comparison with 0 works, in
practice Fraction, rational functions in the parameter c, and elements of
algebraic extensions (see fields.py).

Objects living over different variables mix according to VAR_RANK: the
object whose variable has the higher rank is the container and the other
one is treated as a coefficient.
"""

from fractions import Fraction

# inner variables first; c is the generic fiber parameter, a/q name
# algebraic extension generators, t the residue variable
VAR_RANK = {"c": 1, "a": 2, "q": 2, "t": 3, "z": 4, "x": 5, "y": 6}

ZERO = Fraction(0)
ONE = Fraction(1)


def rank_of(v):
    return getattr(v, "rank", 0)


def norm_coeff(c):
    t = type(c)
    if t is Fraction:
        return c
    if t is int:
        return Fraction(c)
    demote = getattr(c, "demote", None)
    return demote() if demote is not None else c


def _outer(inner, other):
    # same-class operands never reach the reflected method, so hand the
    # operation to the operand living over the higher-ranked variable
    return type(other) is type(inner) and other.rank > inner.rank


def is_scalar(v):
    return isinstance(v, (int, Fraction))


class Poly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="z"):
        cs = [norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def _raw(cls, coeffs, var):
        # trusted constructor: coeffs already normalized
        p = object.__new__(cls)
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        p.coeffs = tuple(cs)
        p.var = var
        return p

    @classmethod
    def monomial(cls, coeff, deg, var="z"):
        return cls([ZERO] * deg + [coeff], var)

    @classmethod
    def gen(cls, var="z"):
        return cls([ZERO, ONE], var)

    @property
    def rank(self):
        return VAR_RANK.get(self.var, 10)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def demote(self):
        if len(self.coeffs) <= 1:
            return self.coeffs[0] if self.coeffs else ZERO
        return self

    # -- coercion -------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Poly):
            if other.var == self.var:
                return other
            if other.rank < self.rank:
                return Poly._raw((other,), self.var)
            return None
        if is_scalar(other):
            return Poly._raw((Fraction(other),), self.var)
        if rank_of(other) < self.rank:
            return Poly._raw((other,), self.var)
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return other.__radd__(self) if _outer(self, other) else NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] = norm_coeff(res[i] + c)
        return Poly._raw(res, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs], self.var)

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
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly._raw((), self.var)
        if len(b) == 1:
            s = b[0]
            return Poly._raw([norm_coeff(c * s) for c in a], self.var)
        if len(a) == 1:
            s = a[0]
            return Poly._raw([norm_coeff(s * c) for c in b], self.var)
        res = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                res[i + j] = res[i + j] + x * y
        return Poly._raw([norm_coeff(c) for c in res], self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Poly._raw((ONE,), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, s):
        return Poly._raw([norm_coeff(c * s) for c in self.coeffs], self.var)

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        inv = ONE / o.lc
        quo = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = norm_coeff(rem[k + dq] * inv)
            quo[k] = c
            if c != 0:
                for j, oc in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - c * oc
        return Poly(quo, self.var), Poly(rem[:dq], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def prem(self, other):
        """Pseudo-remainder: lc(other)^(deg self - deg other + 1) * self mod other."""
        d = other.degree
        lcb = other.lc
        r = self
        e = self.degree - d + 1
        while not r.is_zero() and r.degree >= d:
            t = Poly.monomial(r.lc, r.degree - d, self.var)
            r = r * lcb - t * other
            e -= 1
        return r * (lcb ** e) if e > 0 else r

    # -- calculus and evaluation ------------------------------------------
    def derivative(self):
        return Poly._raw([norm_coeff(c * i) for i, c in enumerate(self.coeffs)][1:], self.var)

    def integral(self):
        """Antiderivative with zero constant term."""
        return Poly._raw([ZERO] + [norm_coeff(c / (i + 1)) for i, c in enumerate(self.coeffs)], self.var)

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return norm_coeff(acc) if not isinstance(acc, Poly) else acc

    def map_coeffs(self, fn, var=None):
        return Poly([fn(c) for c in self.coeffs], var or self.var)

    def monic(self):
        if self.is_zero():
            return self
        lc = self.lc
        if lc == 1:
            return self
        inv = ONE / lc
        return Poly._raw([norm_coeff(c * inv) for c in self.coeffs], self.var)

    def reverse(self):
        return Poly(tuple(reversed(self.coeffs)), self.var)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.demote())
        return hash((self.var, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        from .printing import format_poly
        return f"Poly({format_poly(self)})"

    def __str__(self):
        from .printing import format_poly
        return format_poly(self)


def as_poly(v, var="z"):
    if isinstance(v, Poly) and v.var == var:
        return v
    return Poly((v,), var)


def _inner_var(p):
    """Variable of the rational-function coefficients of p, if they are all over Q."""
    var = None
    for c in p.coeffs:
        if type(c) is Fraction:
            continue
        num, den = getattr(c, "num", None), getattr(c, "den", None)
        if num is None or (var is not None and num.var != var):
            return False
        if any(type(k) is not Fraction for k in num.coeffs + den.coeffs):
            return False
        var = num.var
    return var


def _nested_gcd(p, q, inner):
    """gcd over Q(inner)[var] via a bivariate gcd of the cleared polynomials.

    Euclid over a rational function field blows up its coefficients, so the
    work is handed to sympy's multivariate gcd.
    """
    import sympy

    from .ratfunc import RatFunc

    s, t = sympy.symbols("s t")

    def cleared(poly):
        one = Poly((ONE,), inner)
        dens = [c.den for c in poly.coeffs if type(c) is not Fraction]
        L = one
        for d in dens:
            L = L * d.exquo(poly_gcd(L, d))
        terms = {}
        for i, c in enumerate(poly.coeffs):
            if type(c) is Fraction:
                row = L.scale(c)
            else:
                row = c.num * L.exquo(c.den)
            for j, k in enumerate(row.coeffs):
                if k:
                    terms[(i, j)] = sympy.Rational(k.numerator, k.denominator)
        return sympy.Poly.from_dict(terms, s, t, domain="QQ")

    g = cleared(p).gcd(cleared(q))
    coeffs = [Poly((), inner) for _ in range(g.degree(s) + 1)]
    for (i, j), k in g.terms():
        coeffs[i] = coeffs[i] + Poly.monomial(Fraction(int(k.p), int(k.q)), j, inner)
    out = Poly(tuple(RatFunc(c).demote() for c in coeffs), p.var)
    return out.monic()


# below this degree plain Euclid over Q is faster than the sympy round trip
_DENSE_GCD_DEGREE = 6


def _rational_gcd(p, q):
    import sympy

    def to_sympy(poly):
        return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(poly.coeffs)], sympy.Symbol("s"), domain="QQ")

    g = to_sympy(p).gcd(to_sympy(q)).monic()
    return Poly(tuple(Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())), p.var)


def poly_gcd(p, q):
    """Monic gcd; gcd(p, 0) = monic(p) and gcd(0, 0) = 0."""
    if p.degree > 0 and q.degree > 0:
        inner_p, inner_q = _inner_var(p), _inner_var(q)
        if inner_p is not False and inner_q is not False and (inner_p or inner_q):
            if inner_p is None or inner_q is None or inner_p == inner_q:
                return _nested_gcd(p, q, inner_p or inner_q)
        if inner_p is None and inner_q is None and min(p.degree, q.degree) >= _DENSE_GCD_DEGREE:
            return _rational_gcd(p, q)
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def gcdex(a, b):
    """Return (s, t, g) with s*a + t*b = g = gcd(a, b), g monic."""
    var = a.var
    r0, r1 = a, b
    s0, s1 = Poly((ONE,), var), Poly((), var)
    t0, t1 = Poly((), var), Poly((ONE,), var)
    while not r1.is_zero():
        qt, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    if r0.is_zero():
        return s0, t0, r0
    inv = ONE / r0.lc
    return s0.scale(inv), t0.scale(inv), r0.scale(inv)


def solve_bezout(a, b, c):
    """Solve s*a + t*b = c with deg s < deg b (requires gcd(a, b) | c)."""
    s, t, g = gcdex(a, b)
    q, r = divmod(c, g)
    if not r.is_zero():
        raise ArithmeticError("right-hand side not in the ideal (a, b)")
    s, t = s * q, t * q
    if b.degree > 0:
        k, s = divmod(s, b)
        t = t + k * a
    return s, t


def squarefree_decompose(p):
    """Yun's algorithm.

    Returns [(factor, multiplicity), ...] with monic pairwise coprime squarefree
    factors and strictly increasing multiplicities, so that
    p = lc(p) * prod(factor ** multiplicity).
    """
    if p.is_zero():
        raise ValueError("zero input")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exquo(a)
    c = dp.exquo(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exquo(a)
        c = d.exquo(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def squarefree_part(p):
    sqf = squarefree_decompose(p)
    out = Poly((ONE,), p.var)
    for f, _ in sqf:
        out = out * f
    return out


def _exquo(x, y):
    if isinstance(y, Poly):
        if not isinstance(x, Poly) or x.var != y.var:
            x = Poly((x,), y.var)
        return x.exquo(y)
    if isinstance(x, Poly):
        return x.scale(ONE / y)
    return x / y


def _pow(x, n):
    return x ** n if n else (ONE if not isinstance(x, Poly) else Poly((ONE,), x.var))


def resultant(p, q):
    """Resultant by the subresultant PRS.

    Sign convention: res(p, q) = lc(p)^deg(q) * prod q(alpha) over the roots
    alpha of p, which is the determinant of the Sylvester matrix whose first
    deg(q) rows hold the coefficients of p.  So res(z-2, z-3) = -1.

    Coefficients may live in a field or in a polynomial ring over a field
    (exact division is used, never inversion, so K[t] coefficients work).
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("resultant of two zero polynomials")
    if p.is_zero() or q.is_zero():
        return ZERO
    m, n = p.degree, q.degree
    if n == 0:
        return _pow(q.lc, m)
    if m == 0:
        return _pow(p.lc, n)
    sign = 1
    A, B = p, q
    if m < n:
        A, B = q, p
        if m % 2 and n % 2:
            sign = -1
    g = h = ONE
    while True:
        da, db = A.degree, B.degree
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        R = A.prem(B)
        if R.is_zero():
            return ZERO
        A = B
        div = g * _pow(h, delta)
        B = Poly._raw([norm_coeff(_exquo(c, div)) for c in R.coeffs], R.var)
        g = A.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _exquo(_pow(g, delta), _pow(h, delta - 1))
        if B.degree == 0:
            da = A.degree
            val = _exquo(_pow(B.lc, da), _pow(h, da - 1)) if da > 1 else (B.lc if da == 1 else ONE)
            return norm_coeff(val if sign == 1 else -val)


def discriminant(p):
    """disc(p) = (-1)^(n(n-1)/2) res(p, p') / lc(p)."""
    n = p.degree
    if n < 1:
        raise ValueError("discriminant of a constant")
    r = resultant(p, p.derivative())
    r = _exquo(r, p.lc)
    return norm_coeff(-r if (n * (n - 1) // 2) % 2 else r)
