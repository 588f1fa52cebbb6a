"""Tiny expression language for parametric curve components.

One free variable ``t``; constants; unary ``-``, ``sin``, ``cos``; binary
``+ - * /`` and ``^`` with an integer exponent. Integer-only exponents keep
symbolic differentiation total (no log terms ever appear).

Expression trees are immutable dataclasses, so structural equality and
hashing come for free and trees are safe to share between threads.
Evaluation accepts floats or NumPy arrays alike.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CurveParseError

__all__ = [
    "Expr", "Const", "Var", "Neg", "Sin", "Cos", "Add", "Sub", "Mul", "Div", "Pow",
    "parse_expr", "differentiate", "to_source",
]


class Expr:
    """Base node. Concrete nodes implement __call__ and precedence."""

    precedence = 9

    def __call__(self, t):
        raise NotImplementedError


@dataclass(frozen=True)
class Const(Expr):
    value: float
    precedence = 9

    def __call__(self, t):
        return self.value if np.isscalar(t) else np.full_like(np.asarray(t, float), self.value)


@dataclass(frozen=True)
class Var(Expr):
    precedence = 9

    def __call__(self, t):
        return t


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr
    precedence = 3

    def __call__(self, t):
        return -self.arg(t)


@dataclass(frozen=True)
class Sin(Expr):
    arg: Expr
    precedence = 9

    def __call__(self, t):
        return np.sin(self.arg(t))


@dataclass(frozen=True)
class Cos(Expr):
    arg: Expr
    precedence = 9

    def __call__(self, t):
        return np.cos(self.arg(t))


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr
    precedence = 1

    def __call__(self, t):
        return self.left(t) + self.right(t)


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr
    precedence = 1

    def __call__(self, t):
        return self.left(t) - self.right(t)


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr
    precedence = 2

    def __call__(self, t):
        return self.left(t) * self.right(t)


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr
    precedence = 2

    def __call__(self, t):
        return self.left(t) / self.right(t)


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int
    precedence = 4

    def __call__(self, t):
        return self.base(t) ** self.exponent


# ---------------------------------------------------------------------------
# simplifying constructors (used by the differentiator; keep derivative trees
# small without attempting full canonicalization)

def _is_const(e, v=None):
    return isinstance(e, Const) and (v is None or e.value == v)


def add(a: Expr, b: Expr) -> Expr:
    if _is_const(a) and _is_const(b):
        return Const(a.value + b.value)
    if _is_const(a, 0.0):
        return b
    if _is_const(b, 0.0):
        return a
    return Add(a, b)


def sub(a: Expr, b: Expr) -> Expr:
    if _is_const(a) and _is_const(b):
        return Const(a.value - b.value)
    if _is_const(b, 0.0):
        return a
    if _is_const(a, 0.0):
        return neg(b)
    return Sub(a, b)


def neg(a: Expr) -> Expr:
    if _is_const(a):
        return Const(-a.value)
    if isinstance(a, Neg):
        return a.arg
    return Neg(a)


def mul(a: Expr, b: Expr) -> Expr:
    if _is_const(a) and _is_const(b):
        return Const(a.value * b.value)
    if _is_const(a, 0.0) or _is_const(b, 0.0):
        return Const(0.0)
    if _is_const(a, 1.0):
        return b
    if _is_const(b, 1.0):
        return a
    return Mul(a, b)


def div(a: Expr, b: Expr) -> Expr:
    if _is_const(a, 0.0):
        return Const(0.0)
    if _is_const(b, 1.0):
        return a
    return Div(a, b)


def powi(a: Expr, n: int) -> Expr:
    if n == 0:
        return Const(1.0)
    if n == 1:
        return a
    if _is_const(a):
        return Const(a.value ** n)
    return Pow(a, n)


def differentiate(e: Expr) -> Expr:
    """Exact symbolic derivative d/dt, lightly simplified."""
    if isinstance(e, Const):
        return Const(0.0)
    if isinstance(e, Var):
        return Const(1.0)
    if isinstance(e, Neg):
        return neg(differentiate(e.arg))
    if isinstance(e, Sin):
        return mul(Cos(e.arg), differentiate(e.arg))
    if isinstance(e, Cos):
        return mul(neg(Sin(e.arg)), differentiate(e.arg))
    if isinstance(e, Add):
        return add(differentiate(e.left), differentiate(e.right))
    if isinstance(e, Sub):
        return sub(differentiate(e.left), differentiate(e.right))
    if isinstance(e, Mul):
        return add(mul(differentiate(e.left), e.right), mul(e.left, differentiate(e.right)))
    if isinstance(e, Div):
        num = sub(mul(differentiate(e.left), e.right), mul(e.left, differentiate(e.right)))
        return div(num, powi(e.right, 2))
    if isinstance(e, Pow):
        return mul(mul(Const(float(e.exponent)), powi(e.base, e.exponent - 1)), differentiate(e.base))
    raise TypeError(f"unknown expression node {type(e).__name__}")


# ---------------------------------------------------------------------------
# printing

def _fmt_const(v: float) -> str:
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def to_source(e: Expr) -> str:
    """Render with the fewest parentheses that re-parse to the same value."""
    if isinstance(e, Const):
        v = e.value
        return _fmt_const(v) if v >= 0 else f"(-{_fmt_const(-v)})"
    if isinstance(e, Var):
        return "t"
    if isinstance(e, Sin):
        return f"sin({to_source(e.arg)})"
    if isinstance(e, Cos):
        return f"cos({to_source(e.arg)})"
    if isinstance(e, Neg):
        return f"-{_wrap(e.arg, Neg.precedence)}"
    if isinstance(e, Add):
        return f"{_wrap(e.left, 1)} + {_wrap(e.right, 1)}"
    if isinstance(e, Sub):
        # right side binds one level tighter: a - (b + c) needs the parens
        return f"{_wrap(e.left, 1)} - {_wrap(e.right, 2)}"
    if isinstance(e, Mul):
        return f"{_wrap(e.left, 2)}*{_wrap(e.right, 2)}"
    if isinstance(e, Div):
        return f"{_wrap(e.left, 2)}/{_wrap(e.right, 3)}"
    if isinstance(e, Pow):
        base = to_source(e.base)
        if e.base.precedence < 9 or (isinstance(e.base, Const) and e.base.value < 0):
            base = f"({base})"
        return f"{base}^{e.exponent}"
    raise TypeError(f"unknown expression node {type(e).__name__}")


def _wrap(e: Expr, minimum: int) -> str:
    s = to_source(e)
    return f"({s})" if e.precedence < minimum else s


# ---------------------------------------------------------------------------
# parsing: tokenizer + recursive descent
#
#   expr   := term (('+'|'-') term)*
#   term   := unary (('*'|'/') unary)*
#   unary  := '-' unary | power
#   power  := atom ('^' ('-')? integer)?
#   atom   := number | 't' | ('sin'|'cos') '(' expr ')' | '(' expr ')'

_FUNCTIONS = {"sin": Sin, "cos": Cos}


class _Tokenizer:
    def __init__(self, source: str):
        self.source = source
        self.pos = 0
        self.tokens = []
        self._scan()
        self.index = 0

    def _scan(self):
        src, n = self.source, len(self.source)
        i = 0
        while i < n:
            c = src[i]
            if c.isspace():
                i += 1
                continue
            if c in "+-*/^(),":
                self.tokens.append((c, c, i))
                i += 1
                continue
            if c.isdigit() or c == ".":
                j = i
                while j < n and (src[j].isdigit() or src[j] == "."):
                    j += 1
                if j < n and src[j] in "eE" and j + 1 < n and (src[j + 1].isdigit() or src[j + 1] in "+-"):
                    j += 2
                    while j < n and src[j].isdigit():
                        j += 1
                text = src[i:j]
                try:
                    value = float(text)
                except ValueError:
                    raise CurveParseError(f"malformed number {text!r}", i) from None
                self.tokens.append(("num", value, i))
                i = j
                continue
            if c.isalpha() or c == "_":
                j = i
                while j < n and (src[j].isalnum() or src[j] == "_"):
                    j += 1
                self.tokens.append(("name", src[i:j], i))
                i = j
                continue
            raise CurveParseError(f"unexpected character {c!r}", i)
        self.tokens.append(("end", "", n))

    def peek(self):
        return self.tokens[self.index]

    def next(self):
        tok = self.tokens[self.index]
        if tok[0] != "end":
            self.index += 1
        return tok


class _Parser:
    def __init__(self, source: str):
        self.tok = _Tokenizer(source)

    def expect(self, kind):
        tok = self.tok.next()
        if tok[0] != kind:
            raise CurveParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.tok.peek()[0] in "+-":
            op = self.tok.next()[0]
            rhs = self.parse_term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def parse_term(self) -> Expr:
        node = self.parse_unary()
        while self.tok.peek()[0] in "*/":
            op = self.tok.next()[0]
            rhs = self.parse_unary()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def parse_unary(self) -> Expr:
        if self.tok.peek()[0] == "-":
            self.tok.next()
            return Neg(self.parse_unary())
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        if self.tok.peek()[0] != "^":
            return base
        self.tok.next()
        sign = 1
        if self.tok.peek()[0] == "-":
            self.tok.next()
            sign = -1
        kind, value, pos = self.tok.next()
        if kind != "num" or value != int(value):
            raise CurveParseError("exponent must be an integer literal", pos)
        return Pow(base, sign * int(value))

    def parse_atom(self) -> Expr:
        kind, value, pos = self.tok.next()
        if kind == "num":
            return Const(value)
        if kind == "name":
            if value == "t":
                return Var()
            if value in _FUNCTIONS:
                self.expect("(")
                arg = self.parse_expr()
                self.expect(")")
                return _FUNCTIONS[value](arg)
            raise CurveParseError(f"unknown identifier {value!r} (only t, sin, cos)", pos)
        if kind == "(":
            node = self.parse_expr()
            self.expect(")")
            return node
        raise CurveParseError(f"unexpected token {value!r}", pos)


def parse_expr(source: str) -> Expr:
    """Parse a single expression in the variable t."""
    parser = _Parser(source)
    node = parser.parse_expr()
    kind, value, pos = parser.tok.peek()
    if kind != "end":
        raise CurveParseError(f"trailing input {value!r}", pos)
    return node


def parse_component_tuple(source: str) -> tuple[Expr, Expr, Expr]:
    """Parse a curve source of the form ``(x-expr, y-expr, z-expr)``."""
    parser = _Parser(source)
    parser.expect("(")
    first = parser.parse_expr()
    parser.expect(",")
    second = parser.parse_expr()
    parser.expect(",")
    third = parser.parse_expr()
    parser.expect(")")
    kind, value, pos = parser.tok.peek()
    if kind != "end":
        raise CurveParseError(f"trailing input {value!r}", pos)
    return first, second, third
