"""Recursive-descent parser for polynomial input.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*        # "/" only by nonzero constants
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | IDENT | "(" expr ")"

``x`` is the univariate symbol.  Without an explicit table, identifiers
``a<digits>`` join the coefficient block, ``b<digits>`` the factor block and
``alpha`` the root block; anything else is rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .multipoly import PolyRing, VarTable
from .polydiv import UniPoly

X = "x"
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_AUTO = re.compile(r"^(?:[ab]\d+|alpha)$")


def tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


def identifiers(src):
    return sorted({t[1] for t in tokenize(src) if t[0] == "id"} - {X})


def auto_table(sources, extra=()):
    """Table declaring every identifier found in ``sources`` by its prefix."""
    names = set(extra)
    for src in sources:
        for tok in tokenize(src):
            if tok[0] != "id" or tok[1] == X:
                continue
            if not _AUTO.match(tok[1]):
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
            names.add(tok[1])
    return VarTable.from_names(names)


class _Parser:
    def __init__(self, src, ring):
        self.tokens = tokenize(src)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def const(self, c):
        return UniPoly(self.ring, [self.ring.const(c)])

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            pos = self.peek()[2]
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.degree != 0 or not rhs.coeffs[0].is_constant():
                    raise ParseError("division only by nonzero constants", pos)
                value = value * (1 / rhs.coeffs[0].constant_value())
        return value

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.peek()
            if tok[:2] == ("op", "-"):
                raise ParseError("negative exponent", tok[2])
            if tok[0] != "num":
                raise ParseError("syntax error: expected an integer exponent", tok[2])
            self.take()
            return base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, text, pos = tok
        if kind == "num":
            return self.const(Fraction(int(text)))
        if kind == "id":
            if text == X:
                return UniPoly.x_power(self.ring, 1)
            if text not in self.ring.table:
                raise ParseError(f"unknown variable {text!r}", pos)
            return UniPoly(self.ring, [self.ring.var(text)])
        if tok[:2] == ("op", "("):
            value = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise ParseError("syntax error: expected ')'", close[2])
            return value
        if kind == "end":
            raise ParseError("syntax error: unexpected end of input", pos)
        raise ParseError(f"syntax error: unexpected {text!r}", pos)


def _ring_for(src, table, order):
    if table is None:
        table = auto_table([src])
    elif not isinstance(table, VarTable):
        table = VarTable(table)
    return PolyRing(table, order)


def parse_unipoly(src, table=None, order="block", ring=None):
    """Parse ``src`` as a polynomial in ``x`` with coefficients in Q[table]."""
    ring = ring or _ring_for(src, table, order)
    return _Parser(src, ring).parse()


def parse_multipoly(src, table=None, order="block", ring=None):
    """Parse ``src`` as an element of Q[table]; ``x`` is not allowed."""
    ring = ring or _ring_for(src, table, order)
    value = _Parser(src, ring).parse()
    if value.degree and value.degree > 0:
        raise ParseError("unexpected occurrence of x", src.find(X))
    return value[0]


def parse_poly(src, table=None, order="block", ring=None):
    """UniPoly when ``x`` occurs in ``src``, MultiPoly otherwise."""
    if any(t[:2] == ("id", X) for t in tokenize(src)):
        return parse_unipoly(src, table, order, ring)
    return parse_multipoly(src, table, order, ring)
