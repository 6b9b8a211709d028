"""Command-line interface: one JSON document per invocation, or a JSONL batch."""

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from .affine import acl_profile, affine_stabilizer, canonical_form_detect, relation_report
from .algebra import format_value
from .classifier import classify_poizat, lienard_family_orthogonality, rosenlicht_classify
from .darboux import clear_denominators, darboux_search, jouanolou_report
from .expr import ParseError, parse_family, parse_ratfunc, parse_vector_field
from .forms import check_invariant_volume, volume
from .puiseux import PuiseuxSeries, log_derivative_residue
from .report import report_to_json, rosenlicht_to_json, stabilizer_to_json

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_UNKNOWN = 0, 2, 3, 4
COMMANDS = ("classify", "stabilizer", "relations", "rosenlicht", "darboux", "forms-check", "puiseux-check", "family-orth")


class Options:
    def __init__(self, seed=0, precision=64, strict=False):
        self.seed = seed
        self.precision = precision
        self.strict = strict


# -- command implementations (payload dict -> (result dict, is_unknown)) -----

def cmd_classify(p, opts):
    f = parse_ratfunc(p["f"])
    report = classify_poizat(f, precision=opts.precision, seed=opts.seed)
    return report_to_json(report, opts.seed, opts.precision), report.semiminimal_class == "unknown"


def cmd_stabilizer(p, opts):
    f = parse_ratfunc(p["f"])
    group = affine_stabilizer(f)
    acl = acl_profile(f)
    try:
        canon = canonical_form_detect(f)
    except ValueError:
        canon = None
    return stabilizer_to_json(f, group, acl, canon), False


def cmd_relations(p, opts):
    rep = relation_report(parse_ratfunc(p["f"]), parse_ratfunc(p["g"]))
    return rep.to_json(), False


def cmd_rosenlicht(p, opts):
    w = parse_ratfunc(p["w"], "parametric")
    res = rosenlicht_classify(w, precision=opts.precision, seed=opts.seed)
    return rosenlicht_to_json(w, res), res.verdict == "unknown"


def cmd_darboux(p, opts):
    V = parse_vector_field(p["p"], p["q"])
    max_degree = int(p.get("max_degree", 2))
    out = {"p": p["p"], "q": p["q"], "max_degree": max_degree}
    field = V
    if p.get("clear"):
        cleared = clear_denominators(V)
        field = cleared.field
        out["cleared"] = {
            "p": str(cleared.field[0]),
            "q": str(cleared.field[1]),
            "multiplier": str(cleared.multiplier),
            "note": cleared.note,
        }
    search = darboux_search(field, max_degree, seed=opts.seed)
    jr = jouanolou_report(field, max_degree, seed=opts.seed)
    out["invariants"] = [{"invariant": str(q.invariant), "cofactor": str(q.cofactor)} for q in search.pairs]
    out["warnings"] = search.warnings
    out["jouanolou"] = {
        "curve_count_found": jr.curve_count_found,
        "field_degree": jr.field_degree,
        "darboux_threshold": jr.darboux_threshold,
        "rational_threshold": jr.rational_threshold,
        "darboux_integral_implied": jr.darboux_integral_implied,
        "rational_integral_implied": jr.rational_integral_implied,
    }
    return out, False


def cmd_forms_check(p, opts):
    f = parse_ratfunc(p["f"])
    return {
        "input": format_value(f),
        "invariant_volume": check_invariant_volume(f),
        "plain_area_preserved": check_invariant_volume(f, volume),
    }, False


def random_series(rng, T=16):
    m = rng.randint(1, 4)
    v = rng.randint(-3 * m, 3 * m)
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(T)]
    if coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return PuiseuxSeries(m, v, tuple(coeffs), v + T)


def cmd_puiseux_check(p, opts):
    trials = int(p.get("trials", 200))
    seed = int(p.get("seed", opts.seed))
    rng = random.Random(seed)
    failures = []
    for i in range(trials):
        u = random_series(rng)
        r = log_derivative_residue(u)
        if r != 0:
            failures.append({"trial": i, "series": str(u), "residue": str(r)})
    return {"trials": trials, "seed": seed, "all_zero": not failures, "failures": failures}, False


def cmd_family_orth(p, opts):
    f = parse_ratfunc(p["f"])
    node, params = parse_family(p["family"])
    s0 = p["s0"]
    if isinstance(s0, str):
        s0 = [Fraction(s.strip()) for s in s0.split(",") if s.strip()]
    verdict = lienard_family_orthogonality(f, (node, params), s0)
    return {"f": format_value(f), "family": p["family"], "parameters": params, "s0": [str(s) for s in s0], "verdict": verdict}, False


HANDLERS = {
    "classify": cmd_classify,
    "stabilizer": cmd_stabilizer,
    "relations": cmd_relations,
    "rosenlicht": cmd_rosenlicht,
    "darboux": cmd_darboux,
    "forms-check": cmd_forms_check,
    "puiseux-check": cmd_puiseux_check,
    "family-orth": cmd_family_orth,
}

REQUIRED = {
    "classify": ("f",),
    "stabilizer": ("f",),
    "relations": ("f", "g"),
    "rosenlicht": ("w",),
    "darboux": ("p", "q"),
    "forms-check": ("f",),
    "puiseux-check": (),
    "family-orth": ("f", "family", "s0"),
}


def run_payload(command, payload, opts):
    if command not in HANDLERS:
        raise ValueError(f"unknown command {command!r}")
    missing = [k for k in REQUIRED[command] if k not in payload]
    if missing:
        raise ValueError(f"payload for {command} is missing {', '.join(missing)}")
    return HANDLERS[command](payload, opts)


# -- batch --------------------------------------------------------------------

def batch_run(lines, opts):
    """One result object per input line, in input order; failures stay local."""
    results = []
    seen = set()
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        start = time.perf_counter()
        entry = {"line": lineno}
        try:
            rec = json.loads(line)
            if not isinstance(rec, dict) or "id" not in rec or "command" not in rec:
                raise ValueError("record needs 'id' and 'command'")
            rid = str(rec["id"])
            entry["id"] = rid
            entry["command"] = rec["command"]
            if rid in seen:
                raise ValueError(f"duplicate id {rid!r}")
            seen.add(rid)
            payload = rec.get("payload", {})
            if not isinstance(payload, dict):
                raise ValueError("payload must be an object")
            result, unknown = run_payload(rec["command"], payload, opts)
            entry.update(status="ok", result=result, unknown=unknown)
        except json.JSONDecodeError as exc:
            entry.update(status="error", error=f"malformed JSON: {exc.msg}")
        except ParseError as exc:
            entry.update(status="error", error=f"parse error: {exc}")
        except (ValueError, ArithmeticError) as exc:
            entry.update(status="error", error=str(exc))
        entry["elapsed_seconds"] = round(time.perf_counter() - start, 6)
        results.append(entry)
    return results


# -- argument parsing ----------------------------------------------------------

def _global_flags(parser, suppress):
    """Global flags, accepted before or after the subcommand."""
    defaults = {"seed": 0, "precision": 64, "strict": False}
    if suppress:
        defaults = dict.fromkeys(defaults, argparse.SUPPRESS)
    parser.add_argument("--seed", type=int, default=defaults["seed"], help="seed for randomized fallbacks")
    parser.add_argument("--precision", type=int, default=defaults["precision"], help="digits for numeric checks")
    parser.add_argument("--strict", action="store_true", default=defaults["strict"], help="exit 4 on unknown")


def build_parser():
    parser = argparse.ArgumentParser(prog="poizat", description="Exact analysis of z'' = z' f(z).")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="classify z'' = z' f(z)")
    s.add_argument("--f", required=True)
    s = sub.add_parser("stabilizer", parents=[common], help="affine stabilizer and canonical form")
    s.add_argument("--f", required=True)
    s = sub.add_parser("relations", parents=[common], help="affine relations between two equations")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s = sub.add_parser("rosenlicht", parents=[common], help="orthogonality of z' = w(z), c allowed")
    s.add_argument("--w", required=True)
    s = sub.add_parser("darboux", parents=[common], help="invariant algebraic curves of x' = p, y' = q")
    s.add_argument("--p", required=True)
    s.add_argument("--q", required=True)
    s.add_argument("--max-degree", type=int, default=2)
    s.add_argument("--clear", action="store_true", help="clear denominators before searching")
    s = sub.add_parser("forms-check", parents=[common], help="invariant volume form check")
    s.add_argument("--f", required=True)
    s = sub.add_parser("puiseux-check", parents=[common], help="random residue obstruction trials")
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--trial-seed", dest="trial_seed", type=int, default=None)
    s = sub.add_parser("family-orth", parents=[common], help="orthogonality for a Lienard family")
    s.add_argument("--f", required=True)
    s.add_argument("--family", required=True)
    s.add_argument("--s0", required=True, help="comma-separated rationals")
    s = sub.add_parser("batch", parents=[common], help="run a JSONL batch")
    s.add_argument("--input", required=True)
    s.add_argument("--output", required=True)
    return parser


def _payload(args):
    d = {k: v for k, v in vars(args).items() if k not in ("command", "seed", "precision", "strict") and v is not None}
    if args.command == "puiseux-check":
        d["seed"] = d.pop("trial_seed", args.seed)
    return d


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    opts = Options(args.seed, args.precision, args.strict)
    try:
        if args.command == "batch":
            with open(args.input, encoding="utf-8") as fh:
                results = batch_run(fh, opts)
            with open(args.output, "w", encoding="utf-8") as fh:
                json.dump(results, fh, indent=2)
            errors = sum(r["status"] == "error" for r in results)
            json.dump({"records": len(results), "errors": errors, "output": args.output}, sys.stdout)
            sys.stdout.write("\n")
            return EXIT_OK
        result, unknown = run_payload(args.command, _payload(args), opts)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if unknown and opts.strict:
        return EXIT_UNKNOWN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
