"""Recursive-descent parser for curve expressions.

Grammar (whitespace insignificant, no implicit multiplication)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | var | '(' expr ')'
    rational := int ('/' nat)?

A leading ``+``/``-`` is accepted in front of any term.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .fields import QQ
from .polynomial import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        num, ident, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", int(num), start))
        elif ident is not None:
            tokens.append(("id", ident, start))
        else:
            if sym not in "+-*^/()":
                raise ParseError(f"unexpected character {sym!r}", start)
            tokens.append(("sym", sym, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, variables, field):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = tuple(variables)
        self.field = field
        self.generator = getattr(field, "generator_name", None)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_sym(self, sym):
        kind, val, pos = self.take()
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r}", pos)

    def parse(self):
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return result

    def expr(self):
        acc = self.signed_term()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def signed_term(self):
        kind, val, _ = self.peek()
        if kind == "sym" and val in "+-":
            self.take()
            t = self.term()
            return -t if val == "-" else t
        return self.term()

    def term(self):
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.base()
        kind, val, _ = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind == "sym" and val == "-":
                raise ParseError("negative exponent", pos)
            if kind != "num":
                raise ParseError("expected a natural number exponent", pos)
            return base**val
        return base

    def base(self):
        kind, val, pos = self.take()
        if kind == "num":
            value = Fraction(val)
            nk, nv, _ = self.peek()
            if nk == "sym" and nv == "/":
                self.take()
                dk, dv, dpos = self.take()
                if dk != "num":
                    raise ParseError("expected a natural number denominator", dpos)
                if dv == 0:
                    raise ParseError("zero denominator", dpos)
                value = Fraction(val, dv)
            return Polynomial.constant(value, self.variables, self.field)
        if kind == "id":
            if val in self.variables:
                return Polynomial.var(val, self.variables, self.field)
            if self.generator is not None and val == self.generator:
                return Polynomial.constant(self.field.generator(), self.variables, self.field)
            raise ParseError(f"unknown identifier {val!r}", pos)
        if kind == "sym" and val == "(":
            inner = self.expr()
            self.expect_sym(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_polynomial(text: str, variables=("X", "Y"), field=QQ) -> Polynomial:
    """Parse ``text`` into a canonical Polynomial in ``variables`` over ``field``."""
    if not isinstance(text, str):
        raise ParseError("expression must be a string")
    return _Parser(text, variables, field).parse()


def parse_minpoly(text: str, generator="z"):
    """Parse a minimal polynomial written in the generator, returning QQ coefficients."""
    p = parse_polynomial(text, (generator,), QQ)
    return p.to_univariate()
