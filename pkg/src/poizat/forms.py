"""Rational differential forms on the plane and Cartan calculus.

Functions of (x, y) are RatFunc objects in y whose coefficients lie in
Q(x).  A form of degree 0 is h, degree 1 is p*dx + q*dy, degree 2 is
r*dx^dy.
"""

from dataclasses import dataclass

from .algebra import Poly, RatFunc, as_ratfunc
from .algebra.printing import format_value


def bivariate(v):
    """Coerce a scalar, Q(x) element or Q(x)(y) element to Q(x)(y)."""
    if isinstance(v, RatFunc) and v.var == "y":
        return v
    return as_ratfunc(v, "y")


def x_gen():
    return bivariate(RatFunc.gen("x"))


def y_gen():
    return RatFunc.gen("y")


def _dx_coeff(c):
    return c.derivative() if isinstance(c, RatFunc) else 0


def partial_x(h):
    h = bivariate(h)
    num_x = h.num.map_coeffs(_dx_coeff)
    if h.den.degree == 0 and not isinstance(h.den.coeffs[0], RatFunc):
        return RatFunc(num_x, h.den)
    den_x = h.den.map_coeffs(_dx_coeff)
    return RatFunc(num_x * h.den - h.num * den_x, h.den * h.den)


def partial_y(h):
    return bivariate(h).derivative()


def from_univariate(f, var="x"):
    """f(z) over Q re-expressed in the variable x (as an element of Q(x)(y))."""
    f = as_ratfunc(f)
    return bivariate(RatFunc(Poly(f.num.coeffs, var), Poly(f.den.coeffs, var)))


@dataclass(frozen=True)
class DifferentialForm:
    degree: int
    coeffs: tuple

    def __post_init__(self):
        expected = {0: 1, 1: 2, 2: 1}
        if self.degree not in expected or len(self.coeffs) != expected[self.degree]:
            raise ValueError("plane forms have degree 0, 1 or 2 with 1, 2 or 1 coefficients")
        object.__setattr__(self, "coeffs", tuple(bivariate(c) for c in self.coeffs))

    @classmethod
    def zero(cls, degree):
        return cls(degree, (0,) * (2 if degree == 1 else 1))

    @classmethod
    def function(cls, h):
        return cls(0, (h,))

    @classmethod
    def one_form(cls, p, q):
        return cls(1, (p, q))

    @classmethod
    def two_form(cls, r):
        return cls(2, (r,))

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        return DifferentialForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return DifferentialForm(self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, h):
        h = bivariate(h)
        return DifferentialForm(self.degree, tuple(h * c for c in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return self.degree == other.degree and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __str__(self):
        c = [format_value(v) for v in self.coeffs]
        if self.degree == 0:
            return c[0]
        if self.degree == 1:
            return f"({c[0]})*dx + ({c[1]})*dy"
        return f"({c[0]})*dx^dy"


dx = DifferentialForm(1, (1, 0))
dy = DifferentialForm(1, (0, 1))
volume = DifferentialForm(2, (1,))


@dataclass(frozen=True)
class PlanarDerivation:
    dx_image: RatFunc
    dy_image: RatFunc

    def __post_init__(self):
        object.__setattr__(self, "dx_image", bivariate(self.dx_image))
        object.__setattr__(self, "dy_image", bivariate(self.dy_image))

    def __call__(self, h):
        return self.dx_image * partial_x(h) + self.dy_image * partial_y(h)

    def scale(self, h):
        h = bivariate(h)
        return PlanarDerivation(h * self.dx_image, h * self.dy_image)


def wedge(a, b):
    total = a.degree + b.degree
    if total > 2:
        return DifferentialForm.zero(2)
    if a.degree == 0:
        return b.scale(a.coeffs[0])
    if b.degree == 0:
        return a.scale(b.coeffs[0])
    (p1, q1), (p2, q2) = a.coeffs, b.coeffs
    return DifferentialForm(2, (p1 * q2 - q1 * p2,))


def exterior_d(w):
    if w.degree == 0:
        h = w.coeffs[0]
        return DifferentialForm(1, (partial_x(h), partial_y(h)))
    if w.degree == 1:
        p, q = w.coeffs
        return DifferentialForm(2, (partial_x(q) - partial_y(p),))
    return DifferentialForm.zero(2)


def interior_product(D, w):
    if w.degree == 0:
        return DifferentialForm.zero(0)
    if w.degree == 1:
        p, q = w.coeffs
        return DifferentialForm(0, (p * D.dx_image + q * D.dy_image,))
    r = w.coeffs[0]
    # i_D(dx^dy) = P dy - Q dx
    return DifferentialForm(1, (-r * D.dy_image, r * D.dx_image))


def lie_derivative(D, w):
    """Cartan: L_D = i_D d + d i_D."""
    first = interior_product(D, exterior_d(w)) if w.degree < 2 else DifferentialForm.zero(w.degree)
    if w.degree == 0:
        return first
    return first + exterior_d(interior_product(D, w))


def derivation_from_poizat(f):
    """x' = y, y' = y f(x): the plane system of z'' = z' f(z)."""
    y = y_gen()
    return PlanarDerivation(y, y * from_univariate(f))


def invariant_volume_form():
    return volume.scale(y_gen().inverse())


def check_invariant_volume(f, form=None):
    form = invariant_volume_form() if form is None else form
    return lie_derivative(derivation_from_poizat(f), form).is_zero()
