"""String forms that the expression parser reads back unchanged."""

from fractions import Fraction


def format_scalar(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _monomial(var, k):
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def format_poly(p):
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mono = _monomial(p.var, k)
        if isinstance(c, (int, Fraction)):
            neg = c < 0
            mag = abs(Fraction(c))
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{format_scalar(mag)}*{mono}"
            else:
                body = format_scalar(mag)
        else:
            neg = False
            inner = f"({c})"
            body = f"{inner}*{mono}" if mono else inner
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def format_ratfunc(f):
    num = format_poly(f.num)
    if f.den.degree == 0:
        return num
    den = format_poly(f.den)
    if " " in num:
        num = f"({num})"
    if " " in den or "*" in den or "/" in den:
        den = f"({den})"
    return f"{num}/{den}"


def format_value(v):
    from .poly import Poly
    from .ratfunc import RatFunc
    if isinstance(v, RatFunc):
        return format_ratfunc(v)
    if isinstance(v, Poly):
        return format_poly(v)
    if isinstance(v, (int, Fraction)):
        return format_scalar(v)
    return str(v)
