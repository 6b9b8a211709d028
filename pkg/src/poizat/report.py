"""JSON encoding of classification reports and other command results."""

from fractions import Fraction

from .affine import AffineMap, CanonicalFormWitness
from .algebra import Poly, RatFunc, format_poly, format_value
from .algebra.printing import format_scalar
from .classifier import ClassificationReport, RosenlichtResult, SolutionFlags
from .expr import evaluate, parse_expr, parse_ratfunc

REPORT_KEYS = (
    "input",
    "strongly_minimal",
    "geometrically_trivial",
    "semiminimal_class",
    "dop",
    "model_count_profile",
    "stabilizer",
    "acl_size",
    "residue_count",
    "liouvillian",
    "warnings",
)


def _text(value):
    if value is None:
        return None
    if isinstance(value, (RatFunc, Poly)):
        return format_value(value)
    if isinstance(value, Fraction):
        return format_scalar(value)
    return str(value)


def parse_poly(text, var):
    node = parse_expr(text)
    value = evaluate(node, {var: RatFunc.gen(var)})
    if isinstance(value, RatFunc):
        if not value.is_polynomial():
            raise ValueError(f"expected a polynomial in {var}")
        return value.num
    return Poly((Fraction(value),), var)


def affine_map_from_json(d):
    return AffineMap(
        parse_poly(d["a_minpoly"], "a"),
        int(d["a_root_index"]),
        tuple(Fraction(c) for c in d["b_coeffs"]),
    )


def report_to_json(report, seed=None, precision=None):
    wit = {}
    for key, value in report.witnesses.items():
        if value is None:
            continue
        wit[key] = _text(value)
    out = {
        "input": format_value(report.input),
        "strongly_minimal": report.strongly_minimal,
        "geometrically_trivial": report.geometrically_trivial,
        "semiminimal_class": report.semiminimal_class,
        "dop": report.dop,
        "model_count_profile": report.model_count_profile,
        "stabilizer": None if report.stabilizer is None else [m.to_json() for m in report.stabilizer],
        "acl_size": report.acl_size,
        "residue_count": report.residue_count,
        "liouvillian": report.liouvillian,
        "warnings": list(report.warnings),
        "solution_flags": {
            "pfaffian_excluded": report.solution_flags.pfaffian_excluded,
            "d_reducible_excluded_below": report.solution_flags.d_reducible_excluded_below,
        },
        "witnesses": wit,
    }
    if seed is not None:
        out["seed"] = seed
    if precision is not None:
        out["precision"] = precision
    return out


def report_from_json(d):
    """Rebuild a ClassificationReport; witnesses come back as their text form."""
    flags = d.get("solution_flags", {})
    stab = d.get("stabilizer")
    return ClassificationReport(
        input=parse_ratfunc(d["input"]),
        strongly_minimal=bool(d["strongly_minimal"]),
        geometrically_trivial=bool(d["geometrically_trivial"]),
        solution_flags=SolutionFlags(
            d["liouvillian"],
            bool(flags.get("pfaffian_excluded", d["strongly_minimal"])),
            int(flags.get("d_reducible_excluded_below", 2 if d["strongly_minimal"] else 0)),
        ),
        semiminimal_class=d["semiminimal_class"],
        dop=d["dop"],
        model_count_profile=d["model_count_profile"],
        witnesses=dict(d.get("witnesses", {})),
        warnings=list(d.get("warnings", [])),
        residue_count=int(d["residue_count"]),
        stabilizer=None if stab is None else [affine_map_from_json(m) for m in stab],
        acl_size=d.get("acl_size"),
    )


def stabilizer_to_json(f, group, acl=None, canonical=None):
    out = {
        "input": format_value(f),
        "order": group.order,
        "cyclic": group.is_cyclic,
        "elements": [dict(m.to_json(), map=m.describe()) for m in group.elements],
    }
    if acl is not None:
        out["acl_profile"] = {"kind": acl.kind, "k": acl.k}
    out["canonical_form"] = None if canonical is None else canonical_to_json(canonical)
    return out


def canonical_to_json(w: CanonicalFormWitness):
    return {
        "conjugator": dict(w.conjugator.to_json(), map=w.conjugator.describe()),
        "c": _text(w.c),
        "n": w.n,
        "g_poly": format_poly(w.g_poly),
        "xi_minpoly": format_poly(w.xi_minpoly),
        "xi_root_index": w.xi_root_index,
    }


def rosenlicht_to_json(w, result: RosenlichtResult):
    wit = None
    if result.witness:
        wit = {k: _text(v) for k, v in result.witness.items() if v is not None}
    return {
        "input": format_value(w),
        "verdict": result.verdict,
        "kind": result.kind,
        "witness": wit,
        "reason": result.reason,
    }

