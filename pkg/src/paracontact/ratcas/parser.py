"""Recursive-descent parser for rational-function expressions.

Grammar (whitespace-insensitive)::

    sum      := product (('+' | '-') product)*
    product  := unary (('*' | '/') unary)*
    unary    := ('-' | '+')* power
    power    := atom ('^' exponent)?
    exponent := '-'? INT | '(' '-'? INT ')'
    atom     := INT | IDENT | '(' sum ')'

Integer exponents may be negative (``z^-2`` means ``1/z^2``).  Rational
literals such as ``-1/2`` arise from integer division and unary minus.
"""

from __future__ import annotations

import re

from ..errors import ParseError, UnknownCoordinateError, ZeroDenominatorError
from .coordinates import CoordinateSystem
from .ratfunc import RationalFunction

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        if match.lastgroup == "int":
            tokens.append(("int", match.group("int"), match.start("int")))
        elif match.lastgroup == "ident":
            tokens.append(("ident", match.group("ident"), match.start("ident")))
        else:
            tokens.append(("op", match.group("op"), match.start("op")))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, cs: CoordinateSystem):
        self.text = text
        self.cs = cs
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect_op(self, op: str):
        kind, value, at = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", at)
        return self.advance()

    def parse(self) -> RationalFunction:
        value = self.sum()
        kind, token, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {token!r}", at)
        return value

    def sum(self) -> RationalFunction:
        value = self.product()
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op in "+-":
                self.advance()
                rhs = self.product()
                value = value + rhs if op == "+" else value - rhs
            else:
                return value

    def product(self) -> RationalFunction:
        value = self.unary()
        while True:
            kind, op, at = self.peek()
            if kind == "op" and op in "*/":
                self.advance()
                rhs = self.unary()
                if op == "*":
                    value = value * rhs
                else:
                    if rhs.is_zero():
                        raise ParseError("division by zero", at)
                    value = value / rhs
            else:
                return value

    def unary(self) -> RationalFunction:
        negate = False
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op in "+-":
                self.advance()
                if op == "-":
                    negate = not negate
            else:
                break
        value = self.power()
        return -value if negate else value

    def power(self) -> RationalFunction:
        value = self.atom()
        kind, op, at = self.peek()
        if kind == "op" and op == "^":
            self.advance()
            exponent = self.exponent()
            if exponent < 0 and value.is_zero():
                raise ParseError("zero raised to a negative power", at)
            value = value**exponent
        return value

    def exponent(self) -> int:
        kind, value, at = self.peek()
        parenthesized = kind == "op" and value == "("
        if parenthesized:
            self.advance()
        sign = 1
        kind, value, at = self.peek()
        if kind == "op" and value == "-":
            self.advance()
            sign = -1
        kind, value, at = self.peek()
        if kind != "int":
            raise ParseError("expected an integer exponent", at)
        self.advance()
        if parenthesized:
            self.expect_op(")")
        return sign * int(value)

    def atom(self) -> RationalFunction:
        kind, value, at = self.advance()
        if kind == "int":
            return RationalFunction.constant(self.cs, int(value))
        if kind == "ident":
            if not self.cs.contains(value):
                raise ParseError(f"unknown identifier {value!r}", at)
            return RationalFunction.variable(self.cs, value)
        if kind == "op" and value == "(":
            inner = self.sum()
            self.expect_op(")")
            return inner
        token = value if value else "end of input"
        raise ParseError(f"unexpected {token!r}", at)


def parse_expr(text: str, cs: CoordinateSystem) -> RationalFunction:
    """Parse an expression into its canonical RationalFunction.

    Raises ParseError (position-annotated) on malformed input or unknown
    identifiers, and on division by an expression that is identically zero.
    """
    try:
        return _Parser(text, cs).parse()
    except ZeroDenominatorError as exc:
        # reachable via 0^-1 folded inside '**'; normalize to a parse error
        raise ParseError(str(exc), 0) from exc
