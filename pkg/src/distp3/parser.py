"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace-insensitive)::

    expr     := ['-'] term (('+'|'-') ['-'] term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | z0 | z1 | z2 | z3 | '(' expr ')'
    rational := nat ('/' nat)?

Implicit multiplication is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExponentOverflow, ParseError, UnknownIdentifier
from .poly import VAR_NAMES, Poly

MAX_EXPONENT = 2 ** 31

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(Token("num", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(Token("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(Token("op", ch, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str):
        if not self.accept(op):
            raise ParseError(f"expected {op!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)

    def parse(self) -> Poly:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return p

    def signed_term(self) -> Poly:
        if self.accept("-"):
            return -self.term()
        return self.term()

    def expr(self) -> Poly:
        acc = self.signed_term()
        while True:
            if self.accept("+"):
                acc = acc + self.signed_term()
            elif self.accept("-"):
                acc = acc - self.signed_term()
            else:
                return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.accept("*"):
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.base()
        if self.accept("^"):
            tok = self.tok
            if tok.kind != "num":
                raise ParseError("expected a natural-number exponent", tok.pos)
            n = int(tok.text)
            if n > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {n} exceeds 2^31", tok.pos)
            self.i += 1
            return base ** n
        return base

    def base(self) -> Poly:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            value = Fraction(int(tok.text))
            if self.accept("/"):
                den = self.tok
                if den.kind != "num":
                    raise ParseError("expected a denominator", den.pos)
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.pos)
                self.i += 1
                value /= int(den.text)
            return Poly.constant(value)
        if tok.kind == "ident":
            if tok.text not in VAR_NAMES:
                raise UnknownIdentifier(f"unknown identifier {tok.text!r}", tok.pos)
            self.i += 1
            return Poly.var(VAR_NAMES.index(tok.text))
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)


def parse_poly(text: str) -> Poly:
    """Parse ``text`` into an expanded polynomial."""
    return Parser(text).parse()
