"""Expression language for rational functions and planar vector fields.

Grammar (lowest precedence first)::

    sum     := product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' exponent)?
    exponent:= INT | '(' INT ')'
    atom    := NUMBER | NAME | '(' sum ')'

Exponents are nonnegative integer literals.  Juxtaposition is not
multiplication: ``2z`` is rejected.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, RatFunc, as_ratfunc, format_value

MODES = ("univariate", "parametric", "planar", "family")
_SYMBOLS = {"univariate": {"z"}, "parametric": {"z", "c"}, "planar": {"x", "y"}}


class ParseError(ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str  # num, name, op, end
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str
    line: int = 1
    column: int = 1


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    line: int = 1
    column: int = 1


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


def tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and (text[j].isalpha() or text[j] == "_"):
                raise ParseError("implicit multiplication is not allowed; write '*'", line, col + (j - i))
            tokens.append(Token("num", text[i:j], line, start_col))
            col += j - i
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], line, start_col))
            col += j - i
            i = j
        elif ch in "+-*/^()":
            tokens.append(Token("op", ch, line, start_col))
            i += 1
            col += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self):
        return self.tokens[self.pos]

    def advance(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column)

    def expect(self, text):
        if self.tok.kind != "op" or self.tok.text != text:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def parse(self):
        if self.tok.kind == "end":
            raise self.error("empty expression")
        node = self.sum()
        if self.tok.kind != "end":
            if self.tok.kind in ("num", "name") or self.tok.text == "(":
                raise self.error("implicit multiplication is not allowed; write '*'")
            raise self.error(f"unexpected token {self.tok.text!r}")
        return node

    def sum(self):
        node = self.product()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance()
            right = self.product()
            node = BinOp(op.text, node, right, op.line, op.column)
        return node

    def product(self):
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance()
            right = self.unary()
            node = BinOp(op.text, node, right, op.line, op.column)
        return node

    def unary(self):
        if self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance()
            operand = self.unary()
            return Neg(operand) if op.text == "-" else operand
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            return Pow(base, self.exponent())
        return base

    def exponent(self):
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            return int(tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.tok
            if inner.kind != "num":
                raise self.error("exponent must be a nonnegative integer literal", inner)
            self.advance()
            self.expect(")")
            return int(inner.text)
        raise self.error("exponent must be a nonnegative integer literal", tok)

    def atom(self):
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            return Num(Fraction(int(tok.text)))
        if tok.kind == "name":
            self.advance()
            return Sym(tok.text, tok.line, tok.column)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.sum()
            self.expect(")")
            return node
        found = tok.text or "end of input"
        raise self.error(f"unexpected {found!r}")


def parse_expr(text):
    """Parse text into an expression tree (no symbol checking)."""
    if not text or not text.strip():
        raise ParseError("empty expression")
    return _Parser(text).parse()


def free_symbols(node):
    if isinstance(node, Sym):
        return {node.name}
    if isinstance(node, Neg):
        return free_symbols(node.operand)
    if isinstance(node, Pow):
        return free_symbols(node.base)
    if isinstance(node, BinOp):
        return free_symbols(node.left) | free_symbols(node.right)
    return set()


def evaluate(node, env):
    """Evaluate a tree with symbols bound by env (name -> field element)."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Sym):
        if node.name not in env:
            raise ParseError(f"unknown symbol {node.name!r}", node.line, node.column)
        return env[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.operand, env)
    if isinstance(node, Pow):
        base = evaluate(node.base, env)
        return base ** node.exponent if node.exponent else Fraction(1)
    left = evaluate(node.left, env)
    right = evaluate(node.right, env)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right == 0:
        raise ParseError("division by zero", node.line, node.column)
    return left / right


def _env(mode):
    if mode == "univariate":
        return {"z": RatFunc.gen("z")}
    if mode == "parametric":
        return {"z": RatFunc.gen("z"), "c": RatFunc.gen("c")}
    if mode == "planar":
        return {"x": RatFunc.gen("x"), "y": RatFunc.gen("y")}
    raise ValueError(f"unknown mode {mode!r}")


def parse_ratfunc(text, mode="univariate"):
    """Parse text into a reduced RatFunc.

    univariate: symbol z over Q.  parametric: z over Q(c).  planar: a
    function of (x, y) stored as a RatFunc in y over Q(x).
    """
    if mode not in _SYMBOLS:
        raise ValueError(f"unknown mode {mode!r}")
    node = parse_expr(text)
    value = evaluate(node, _env(mode))
    return as_ratfunc(value, "y" if mode == "planar" else "z")


@dataclass(frozen=True)
class PlanarVectorField:
    """x' = P(x, y), y' = Q(x, y) with P, Q in Q(x)(y)."""

    P: RatFunc
    Q: RatFunc

    def __str__(self):
        return f"({format_value(self.P)}, {format_value(self.Q)})"


def parse_vector_field(p_text, q_text):
    return PlanarVectorField(parse_ratfunc(p_text, "planar"), parse_ratfunc(q_text, "planar"))


def parse_family(text, params=None):
    """Parse a parametric family g(s, z).

    Every identifier other than z is a parameter.  Unless ``params`` fixes
    the order, parameters are sorted by name.  Returns (tree, params).
    """
    node = parse_expr(text)
    names = sorted(free_symbols(node) - {"z"})
    if params is None:
        params = names
    else:
        params = list(params)
        extra = set(names) - set(params)
        if extra:
            raise ParseError(f"undeclared parameter(s) {sorted(extra)}")
    return node, params


def specialize_family(node, params, point):
    if len(point) != len(params):
        raise ValueError(f"parameter point has {len(point)} entries, family has {len(params)} parameters")
    env = {"z": RatFunc.gen("z")}
    env.update({p: Fraction(v) for p, v in zip(params, point)})
    return as_ratfunc(evaluate(node, env), "z")


def format_expr(value):
    """Render a value so that parse_ratfunc(format_expr(v)) == v."""
    if isinstance(value, PlanarVectorField):
        return str(value)
    if isinstance(value, Poly):
        value = RatFunc(value)
    return format_value(value)


format = format_expr  # noqa: A001 - public name
