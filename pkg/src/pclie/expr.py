"""Expression language for Lie elements.

Grammar::

    EXPR := ['+'|'-'] TERM (('+'|'-') TERM)*
    TERM := [RAT ['*']] ATOM | '0'
    ATOM := NAME | '[' EXPR ',' EXPR ']' | '(' EXPR ')'
    RAT  := INT ['/' INT]

``[a,b]`` is the Lie product.  Positions in error messages are 1-based
character columns.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, UnknownGeneratorError


class Expr:
    """Base class of expression nodes."""


@dataclass(frozen=True)
class Zero(Expr):
    pass


@dataclass(frozen=True)
class Gen(Expr):
    name: str


@dataclass(frozen=True)
class Scale(Expr):
    coeff: Fraction
    expr: Expr


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Bracket(Expr):
    left: Expr
    right: Expr


def degree_bound(e: Expr) -> int:
    """Largest total degree any monomial of `e` can have before cancellation."""
    if isinstance(e, Zero):
        return 0
    if isinstance(e, Gen):
        return 1
    if isinstance(e, Scale):
        return degree_bound(e.expr)
    if isinstance(e, (Add, Sub)):
        return max(degree_bound(e.left), degree_bound(e.right))
    if isinstance(e, Bracket):
        return degree_bound(e.left) + degree_bound(e.right)
    raise TypeError(f"not an expression: {e!r}")


_TOKEN = re.compile(r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[-+*/\[\](),])")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), pos + 1))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, names):
        self.tokens = _tokenize(text)
        self.i = 0
        self.names = names

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, text, pos = self.next()
        if text != value or kind != "op":
            got = "end of input" if kind == "end" else repr(text)
            raise ParseError(f"expected {value!r}, got {got}", pos)

    def expr(self):
        sign = None
        kind, text, _ = self.peek()
        if kind == "op" and text in "+-":
            self.next()
            sign = text
        node = self.term()
        if sign == "-":
            node = Scale(Fraction(-1), node)
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.next()
                rhs = self.term()
                node = Add(node, rhs) if text == "+" else Sub(node, rhs)
            else:
                return node

    def term(self):
        kind, text, pos = self.peek()
        if kind == "int":
            coeff = self.rational()
            kind, text, pos = self.peek()
            if kind == "op" and text == "*":
                self.next()
            elif not (kind == "name" or (kind == "op" and text in "[(")):
                if coeff == 0:
                    return Zero()
                raise ParseError("a scalar must multiply a Lie element", pos)
            return Scale(coeff, self.atom())
        return self.atom()

    def rational(self):
        _, num, _ = self.next()
        kind, text, _ = self.peek()
        if kind == "op" and text == "/":
            self.next()
            kind, den, pos = self.next()
            if kind != "int" or int(den) == 0:
                raise ParseError("denominator must be a positive integer", pos)
            return Fraction(int(num), int(den))
        return Fraction(int(num))

    def atom(self):
        kind, text, pos = self.next()
        if kind == "name":
            if self.names is not None and text not in self.names:
                raise UnknownGeneratorError(text)
            return Gen(text)
        if kind == "op" and text == "[":
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Bracket(left, right)
        if kind == "op" and text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        got = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"expected a generator, '[' or '(', got {got}", pos)


def parse_expr(text: str, names=None) -> Expr:
    """Parse `text`; if `names` is given, identifiers must be among them."""
    p = _Parser(text, None if names is None else set(names))
    node = p.expr()
    kind, tok, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {tok!r}", pos)
    return node
