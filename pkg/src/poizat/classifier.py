"""Decision procedure for the second-order equation z'' = z' * f(z).

The equation is strongly minimal exactly when f is not the derivative of
a rational function.  Otherwise z' - g(z) is a first integral for the
antiderivative g, and the behaviour of the fibres z' = g(z) + c decides
the structure of the non-minimal case.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Poly, RatFunc, as_ratfunc, discriminant, format_value
from .expr import parse_family, specialize_family
from .hermite import (
    hermite_reduce,
    is_exact_derivative,
    is_log_derivative_multiple,
    nonzero_residue_count,
    rational_antiderivative,
)

SEMIMINIMAL_CLASSES = (
    "strongly-minimal",
    "internal",
    "two-step-analyzable",
    "orthogonal-generic-fiber",
    "analyzable-via-log-derivative",
    "unknown",
)


@dataclass(frozen=True)
class SolutionFlags:
    liouvillian_nonalgebraic_solutions: str  # none | all-fibers-liouvillian | unknown
    pfaffian_excluded: bool
    d_reducible_excluded_below: int


@dataclass(frozen=True)
class FirstIntegral:
    """poly_part(z) + z_prime_coeff * z', constant along solutions."""

    poly_part: Poly
    z_prime_coeff: Fraction

    def __str__(self):
        base = format_value(self.poly_part)
        k = self.z_prime_coeff
        if k == 0:
            return base
        sign = "-" if k < 0 else "+"
        mag = abs(k)
        term = "z'" if mag == 1 else f"{mag}*z'"
        return f"{base} {sign} {term}"


def is_first_integral(f, integral):
    """Check d/dt W = 0 modulo z'' = z' f(z), i.e. W_z + k f = 0."""
    f = as_ratfunc(f)
    return as_ratfunc(integral.poly_part.derivative()) + f * integral.z_prime_coeff == 0


@dataclass(frozen=True)
class RosenlichtResult:
    verdict: str  # nonorthogonal | orthogonal | unknown
    kind: str = None  # exact-derivative | log-derivative
    witness: dict = None
    reason: str = ""


@dataclass
class ClassificationReport:
    input: RatFunc
    strongly_minimal: bool
    geometrically_trivial: bool
    solution_flags: SolutionFlags
    semiminimal_class: str
    dop: str
    model_count_profile: str
    witnesses: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    residue_count: int = 0
    stabilizer: list = None
    acl_size: int = None

    def __post_init__(self):
        if self.strongly_minimal and not self.geometrically_trivial:
            raise AssertionError("strongly minimal report must be geometrically trivial")
        if self.strongly_minimal != (self.semiminimal_class == "strongly-minimal"):
            raise AssertionError("strong minimality and semiminimal class disagree")
        if self.dop == "yes" and self.model_count_profile != "two-to-kappa":
            raise AssertionError("DOP requires the two-to-kappa model count")

    @property
    def liouvillian(self):
        return self.solution_flags.liouvillian_nonalgebraic_solutions


def rosenlicht_classify(w, precision=64, seed=0):
    """Is z' = w(z) nonorthogonal to the constants?  Tests 1/w for both witness shapes."""
    w = as_ratfunc(w)
    if w.is_zero():
        raise ValueError("degenerate fiber: w = 0")
    inv = w.inverse()
    v = rational_antiderivative(inv)
    if v is not None:
        return RosenlichtResult("nonorthogonal", "exact-derivative", {"v": v})
    log = is_log_derivative_multiple(inv, precision=precision, seed=seed)
    if log.status == "yes":
        return RosenlichtResult(
            "nonorthogonal", "log-derivative", {"c1": log.c1, "u": log.u, "extension": log.extension}
        )
    if log.status == "no":
        return RosenlichtResult("orthogonal", reason=log.reason)
    return RosenlichtResult("unknown", reason=log.reason)


def _as_polynomial(g):
    if isinstance(g, Poly):
        return g
    g = as_ratfunc(g)
    if not g.is_polynomial():
        raise ValueError("expected a polynomial")
    return g.num.scale(1 / g.den.lc) if g.den.lc != 1 else g.num


def generic_fiber_squarefree(g):
    """(True, disc_z(g(z) + c)) as a polynomial in c; nonconstant g only."""
    g = _as_polynomial(g)
    if g.degree < 1:
        raise ValueError("generic fiber test needs a nonconstant polynomial")
    c = Poly.gen("c")
    shifted = Poly((g.coeff(0) + c,) + tuple(g.coeffs[1:]), "z")
    bad = discriminant(shifted)
    if not isinstance(bad, Poly):
        bad = Poly((bad,), "c")
    return (not bad.is_zero(), bad)


def lienard_family_orthogonality(f, family, s0, params=None):
    """Apply the orthogonality criterion for y'' + y' f(y) + g(s, y) = 0."""
    f = as_ratfunc(f)
    if isinstance(family, str):
        node, params = parse_family(family, params)
    else:
        node, params = family
    g0 = specialize_family(node, params, s0)
    if nonzero_residue_count(f) >= 1 and g0.is_zero():
        return "orthogonal-for-generic-s"
    return "inapplicable"


def _fiber_family(g):
    """g(z) + c over Q(c)."""
    c = RatFunc.gen("c")
    return RatFunc(g.num + g.den * c, g.den)


def _liouvillian_flag(cls):
    if cls == "strongly-minimal":
        return "none"
    if cls in ("internal", "two-step-analyzable", "analyzable-via-log-derivative"):
        return "all-fibers-liouvillian"
    return "unknown"


def _strongly_minimal_extras(f, report):
    from .affine import affine_stabilizer

    try:
        stab = affine_stabilizer(f)
    except ValueError as exc:
        report.warnings.append(f"stabilizer not computed: {exc}")
        return
    report.stabilizer = list(stab.elements)
    report.acl_size = stab.order


def classify_poizat(f, precision=64, seed=0):
    f = as_ratfunc(f)
    n = nonzero_residue_count(f)
    if not is_exact_derivative(f):
        report = ClassificationReport(
            f, True, True, SolutionFlags("none", True, 2), "strongly-minimal", "no", "all-one", residue_count=n
        )
        _strongly_minimal_extras(f, report)
        return report

    g = rational_antiderivative(f)
    witnesses = {"g": g}
    warnings = []
    dop = "no"
    profile = "unknown"
    if f.is_zero():
        cls = "internal"
        profile = "countable-split"
        warnings.append("degenerate: f = 0, the equation is z'' = 0")
    elif f.is_constant():
        cls = "internal"
        profile = "countable-split"
        witnesses["first_integral"] = FirstIntegral(g.num, Fraction(-1))
    elif f.is_polynomial() and f.num.degree == 1:
        cls = "two-step-analyzable"
        profile = "countable-split"
        slope = f.num.lc
        wit = FirstIntegral(g.num.scale(2 / slope), -2 / slope)
        if not is_first_integral(f, wit):
            raise ArithmeticError("first integral failed verification")
        witnesses["first_integral"] = wit
        witnesses["fiber_family"] = _fiber_family(g)
    elif f.is_polynomial() and f.num.degree == 2:
        cls = "orthogonal-generic-fiber"
        dop = "yes"
        profile = "two-to-kappa"
        witnesses["fiber_family"] = _fiber_family(g)
        check = rosenlicht_classify(witnesses["fiber_family"], precision, seed)
        if check.verdict != "orthogonal":
            warnings.append(f"fiber test returned {check.verdict} for a cubic antiderivative")
    else:
        fam = _fiber_family(g)
        witnesses["fiber_family"] = fam
        res = rosenlicht_classify(fam, precision, seed)
        if res.verdict == "nonorthogonal" and res.kind == "log-derivative":
            cls = "analyzable-via-log-derivative"
            witnesses.update(res.witness)
        elif res.verdict == "orthogonal":
            cls = "orthogonal-generic-fiber"
            dop = "unknown"
        else:
            cls = "unknown"
            dop = "unknown"
            warnings.append(f"fiber test inconclusive ({res.kind or res.verdict}): {res.reason}".rstrip(": "))
        if cls == "analyzable-via-log-derivative":
            dop = "unknown"
    return ClassificationReport(
        f,
        False,
        False,
        SolutionFlags(_liouvillian_flag(cls), False, 0),
        cls,
        dop,
        profile,
        witnesses,
        warnings,
        residue_count=n,
    )
