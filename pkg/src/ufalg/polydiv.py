"""Univariate polynomials in ``x`` over a multivariate coefficient ring.

Long division by a monic divisor works over any commutative coefficient
ring, which is what lets us divide by the generic polynomial
``x^k + b_{k-1} x^{k-1} + ... + b_0`` whose coefficients are indeterminates.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError, StructuralError
from .multipoly import Block, MultiPoly, PolyRing, render_terms


class UniPoly:
    """``c_0 + c_1 x + ... + c_n x^n`` with each ``c_i`` a MultiPoly over ``ring``.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and ``degree`` is ``None``.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def from_rationals(cls, values, ring=None):
        """From ascending numeric coefficients; default ring has no variables."""
        ring = ring or PolyRing(())
        return cls(ring, [ring.const(v) for v in values])

    @classmethod
    def x_power(cls, ring, n, c=None):
        c = ring.one() if c is None else ring.coerce(c)
        return cls(ring, [ring.zero()] * n + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero()

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero()

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_numeric(self):
        return all(c.is_constant() for c in self.coeffs)

    def rational_coeffs(self):
        """Ascending coefficients as Fractions; requires constant coefficients."""
        return [c.constant_value() for c in self.coeffs]

    def _check(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.ring != self.ring:
            raise StructuralError(f"{other.ring!r} does not match {self.ring!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.ring, [self[i] + other[i] for i in range(n)])

    def __neg__(self):
        return UniPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (MultiPoly, int, Fraction)):
            c = self.ring.coerce(other)
            return UniPoly(self.ring, [c * a for a in self.coeffs])
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UniPoly(self.ring, [])
        out = [self.ring.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return UniPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = UniPoly(self.ring, [self.ring.one()])
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def evaluate_at(self, value):
        """Horner evaluation at a ring element, e.g. ``f(alpha)``."""
        value = self.ring.coerce(value)
        acc = self.ring.zero()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self):
        return UniPoly(self.ring, [c * i for i, c in enumerate(self.coeffs)][1:])

    def embed(self, ring):
        return UniPoly(ring, [c.embed(ring) for c in self.coeffs])

    def map_coeffs(self, fn, ring=None):
        return UniPoly(ring or self.ring, [fn(c) for c in self.coeffs])

    def __str__(self):
        return render_unipoly(self)

    def __repr__(self):
        return f"UniPoly({str(self)!r})"


def render_unipoly(f, var="x"):
    if not f.coeffs:
        return "0"
    pieces = []
    for d in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[d]
        if c.is_zero():
            continue
        xpart = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        terms = c.terms()
        if len(terms) == 1:
            e, v = terms[0]
            coeff_text = render_terms([(e, abs(v))], f.ring.table)
            negative = v < 0
            if not xpart:
                body = coeff_text
            elif coeff_text == "1":
                body = xpart
            else:
                body = f"{coeff_text}*{xpart}"
        else:
            negative = False
            body = f"({render_terms(terms, f.ring.table)})"
            if xpart:
                body = f"{body}*{xpart}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" {'-' if negative else '+'} {body}")
    return "".join(pieces)


def long_divide(f, g):
    """Divide ``f`` by the monic ``g``; return ``(q, r)`` with ``f = q*g + r``.

    Either ``r`` is zero or ``deg r < deg g``.  Raises PreconditionError when
    ``g`` is zero or its leading coefficient is not the constant 1.
    """
    if f.ring != g.ring:
        raise StructuralError(f"{f.ring!r} does not match {g.ring!r}")
    if g.is_zero():
        raise PreconditionError("division by the zero polynomial")
    if not g.is_monic():
        raise PreconditionError("divisor must be monic (leading coefficient 1)")
    ring = f.ring
    dg = g.degree
    rem = list(f.coeffs)
    if f.degree is None or f.degree < dg:
        return UniPoly(ring, []), f
    quot = [ring.zero()] * (f.degree - dg + 1)
    for d in range(f.degree, dg - 1, -1):
        c = rem[d]
        if c.is_zero():
            continue
        shift = d - dg
        quot[shift] = c
        for i, gc in enumerate(g.coeffs):
            if not gc.is_zero():
                rem[shift + i] = rem[shift + i] - c * gc
    return UniPoly(ring, quot), UniPoly(ring, rem[:dg])


def factor_var_names(k, prefix="b"):
    return [f"{prefix}{i}" for i in range(k)]


def generic_monic(k, ring, prefix="b"):
    """``x^k + b_{k-1} x^{k-1} + ... + b_0`` over ``ring``; the constant 1 when k = 0."""
    names = factor_var_names(k, prefix)
    for name in names:
        if name not in ring.table:
            raise StructuralError(f"ring has no factor variable {name!r}")
        if ring.table.vars[ring.table.index(name)].block is not Block.FACTOR:
            raise StructuralError(f"{name!r} is not a factor-block variable")
    return UniPoly(ring, [ring.var(n) for n in names] + [ring.one()])
