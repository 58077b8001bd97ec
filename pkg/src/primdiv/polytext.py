"""Reading and writing polynomials as text.

Grammar (``*`` between factors is optional, ``/`` needs a constant divisor)::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/")? factor)*
    factor := ("+" | "-") factor | atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"

Variables are ``x1`` .. ``xr``; for ``r <= 3`` the aliases ``x, y, z`` name
the first three.  Output is canonical: graded-lex descending terms, explicit
``*``, rationals as ``a/b``.
"""

from __future__ import annotations

import re

from .errors import CoefficientNotInField, DivisionByZero, PolySyntaxError, UnknownVariable
from .mpoly import MPoly, RingSpec

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")
_ALIASES = {"x": 0, "y": 1, "z": 2}


def _tokenize(text: str):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(("end", None, n))
    return out


def resolve_variable(name: str, ring: RingSpec) -> int:
    r = ring.num_vars
    if r <= 3 and name in _ALIASES and _ALIASES[name] < r:
        return _ALIASES[name]
    m = re.fullmatch(r"x([1-9]\d*)", name)
    if m and int(m.group(1)) <= r:
        return int(m.group(1)) - 1
    raise UnknownVariable(f"unknown variable {name!r} in {ring}")


class _Parser:
    def __init__(self, text: str, ring: RingSpec):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise PolySyntaxError(f"expected {op!r}", pos)

    def parse(self) -> MPoly:
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty input", 0)
        result = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise PolySyntaxError("unexpected token", pos)
        return result

    def expr(self) -> MPoly:
        acc = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def _starts_atom(self) -> bool:
        kind, val, _ = self.peek()
        return kind in ("int", "name") or (kind == "op" and val == "(")

    def term(self) -> MPoly:
        acc = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                divisor = self.factor()
                acc = self._divide(acc, divisor, pos)
            elif self._starts_atom():
                acc = acc * self.factor()
            else:
                return acc

    def _divide(self, num: MPoly, den: MPoly, pos: int) -> MPoly:
        if not den.is_constant():
            raise PolySyntaxError("division by a non-constant", pos)
        if den.is_zero():
            raise CoefficientNotInField(f"denominator at position {pos} is zero in {self.ring}")
        try:
            inv = self.ring.field.inv(den._t[0])
        except DivisionByZero as exc:
            raise CoefficientNotInField(str(exc)) from None
        return num.scale(self.ring.field.to_public(inv))

    def factor(self) -> MPoly:
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            f = self.factor()
            return -f if val == "-" else f
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, e, epos = self.take()
            if kind != "int":
                raise PolySyntaxError("exponent must be a nonnegative integer", epos)
            return base**e
        return base

    def atom(self) -> MPoly:
        kind, val, pos = self.take()
        if kind == "int":
            return self.ring.const(val)
        if kind == "name":
            return self.ring.gen(resolve_variable(val, self.ring))
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise PolySyntaxError("expected a number, variable or '('", pos)


def parse_poly(text: str, ring: RingSpec) -> MPoly:
    """Parse ``text`` into a polynomial of ``ring``."""
    return _Parser(text, ring).parse()


def _monomial(exps, names) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(h: MPoly) -> str:
    """Canonical text of ``h``; the zero polynomial is ``"0"``."""
    if h.is_zero():
        return "0"
    names = h.ring.var_names()
    p = h.ring.characteristic
    pieces = []
    for exps, c in h.terms:
        c = int(c) if p else c
        neg = c < 0
        mag = -c if neg else c
        mono = _monomial(exps, names)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)

