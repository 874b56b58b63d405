"""Sparse multivariate polynomials over Q with block-tagged variables.

A polynomial is a mapping from exponent tuples to nonzero Fractions.  The
tuple is indexed by position in the ring's :class:`VarTable`.  Terms are
presented in strictly descending order under the ring's monomial order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import as_rational
from .errors import DomainError, StructuralError


class Block(enum.Enum):
    COEFFICIENT = "coefficient"
    FACTOR = "factor"
    ROOT = "root"


@dataclass(frozen=True)
class Var:
    name: str
    block: Block


class VarTable:
    """Ordered, name-unique list of variables.

    Within one block a variable later in the table ranks higher in every
    monomial order built from the table, so ``[a0, a1, a2, b0, b1]`` gives
    ``b1 > b0`` and ``a2 > a1 > a0``.
    """

    __slots__ = ("vars", "_index")

    def __init__(self, variables=()):
        vs = []
        for v in variables:
            if isinstance(v, str):
                v = Var(v, block_for_name(v))
            vs.append(v)
        self.vars = tuple(vs)
        self._index = {v.name: i for i, v in enumerate(self.vars)}
        if len(self._index) != len(self.vars):
            raise StructuralError("variable names must be unique")

    @classmethod
    def from_names(cls, names):
        """Table from bare names, blocks inferred from prefixes, in canonical order."""
        return cls(sorted((Var(n, block_for_name(n)) for n in set(names)), key=_canonical_key))

    def __len__(self):
        return len(self.vars)

    def __iter__(self):
        return iter(self.vars)

    def __eq__(self, other):
        return isinstance(other, VarTable) and self.vars == other.vars

    def __hash__(self):
        return hash(self.vars)

    def __repr__(self):
        return f"VarTable({[v.name for v in self.vars]})"

    @property
    def names(self):
        return [v.name for v in self.vars]

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise StructuralError(f"unknown variable {name!r}") from None

    def __contains__(self, name):
        return name in self._index

    def indices(self, block):
        return [i for i, v in enumerate(self.vars) if v.block is block]

    def extend(self, variables):
        """New table with ``variables`` appended (names already present are skipped)."""
        extra = []
        for v in variables:
            if isinstance(v, str):
                v = Var(v, block_for_name(v))
            if v.name in self._index:
                if self.vars[self._index[v.name]] != v:
                    raise StructuralError(f"variable {v.name!r} redeclared in another block")
                continue
            extra.append(v)
        return VarTable(self.vars + tuple(extra))

    def to_json(self):
        return [{"name": v.name, "block": v.block.value} for v in self.vars]


def block_for_name(name):
    if name == "alpha":
        return Block.ROOT
    if name.startswith("b"):
        return Block.FACTOR
    return Block.COEFFICIENT


def _canonical_key(v):
    order = {Block.COEFFICIENT: 0, Block.FACTOR: 1, Block.ROOT: 2}
    head = v.name.rstrip("0123456789")
    tail = v.name[len(head):]
    return order[v.block], head, int(tail) if tail else -1, v.name


# -- monomial orders -------------------------------------------------------

ORDER_KINDS = ("block", "block-lex", "lex", "grevlex")


class MonomialOrder:
    """A monomial order realized as a sort key on exponent tuples.

    ``"block"`` ranks root, then factor, then coefficient variables, graded
    reverse lexicographic inside each block.  Grading inside the factor block
    is what makes ``b0^2`` lead ``a0*b1``.  ``"block-lex"`` uses plain lex on
    the root and factor variables instead.

    ``blocks`` is a sequence of ``(indices, inner)`` where ``indices`` lists
    variable positions from highest to lowest rank and ``inner`` is ``"lex"``
    or ``"grevlex"``.  Blocks are compared in sequence.
    """

    def __init__(self, kind, blocks):
        self.kind = kind
        self.blocks = tuple((tuple(ix), inner) for ix, inner in blocks if ix)
        self.key = lru_cache(maxsize=None)(self._build_key())

    @classmethod
    def for_table(cls, table, kind="block"):
        ranked = list(range(len(table)))[::-1]
        if kind == "lex":
            return cls("lex", [(ranked, "lex")])
        if kind == "grevlex":
            return cls("grevlex", [(ranked, "grevlex")])
        if kind == "block":
            return cls("block", [
                ([i for i in ranked if table.vars[i].block is b], "grevlex")
                for b in (Block.ROOT, Block.FACTOR, Block.COEFFICIENT)
            ])
        if kind == "block-lex":
            top = [i for i in ranked if table.vars[i].block is Block.ROOT]
            top += [i for i in ranked if table.vars[i].block is Block.FACTOR]
            bottom = [i for i in ranked if table.vars[i].block is Block.COEFFICIENT]
            return cls("block-lex", [(top, "lex"), (bottom, "grevlex")])
        raise DomainError(f"unknown monomial order {kind!r}")

    def _build_key(self):
        blocks = self.blocks

        def key(exp):
            out = []
            for ix, inner in blocks:
                if inner == "lex":
                    out.extend(exp[i] for i in ix)
                else:
                    out.append(sum(exp[i] for i in ix))
                    out.extend(-exp[i] for i in reversed(ix))
            return tuple(out)

        return key

    def compare(self, u, v):
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def describe(self, table):
        return {
            "kind": self.kind,
            "blocks": [
                {"variables": [table.vars[i].name for i in ix], "inner": inner}
                for ix, inner in self.blocks
            ],
        }

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)


# -- rings and polynomials -------------------------------------------------


class PolyRing:
    """Q[table] with a fixed monomial order."""

    __slots__ = ("table", "order_kind", "order", "nvars")

    def __init__(self, table, order="block"):
        if not isinstance(table, VarTable):
            table = VarTable(table)
        self.table = table
        self.order_kind = order
        self.order = MonomialOrder.for_table(table, order)
        self.nvars = len(table)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.table == other.table
            and self.order_kind == other.order_kind
        )

    def __hash__(self):
        return hash((self.table, self.order_kind))

    def __repr__(self):
        return f"PolyRing({self.table.names}, order={self.order_kind!r})"

    def extend(self, variables):
        return PolyRing(self.table.extend(variables), self.order_kind)

    def with_order(self, kind):
        return PolyRing(self.table, kind)

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        return MultiPoly(self, {(0,) * self.nvars: as_rational(c)})

    def var(self, name):
        e = [0] * self.nvars
        e[self.table.index(name)] = 1
        return MultiPoly(self, {tuple(e): Fraction(1)})

    def monomial(self, exp, c=1):
        if len(exp) != self.nvars:
            raise StructuralError("exponent vector length does not match the table")
        return MultiPoly(self, {tuple(exp): as_rational(c)})

    def coerce(self, value):
        if isinstance(value, MultiPoly):
            if value.ring != self:
                raise StructuralError(f"{value.ring!r} does not match {self!r}")
            return value
        return self.const(value)


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to Fractions."""

    __slots__ = ("ring", "_terms", "_sorted")

    def __init__(self, ring, terms=None, _trusted=False):
        self.ring = ring
        if _trusted:
            self._terms = terms
        else:
            self._terms = {}
            for e, c in (terms or {}).items():
                c = as_rational(c)
                if c:
                    self._terms[tuple(e)] = c
        self._sorted = None

    # -- inspection
    @property
    def table(self):
        return self.ring.table

    def as_dict(self):
        return dict(self._terms)

    def terms(self):
        """Terms ``(exponent, coefficient)`` in strictly descending order."""
        if self._sorted is None:
            key = self.ring.order.key
            self._sorted = sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)
        return list(self._sorted)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_value(self):
        """The value of a constant polynomial; DomainError otherwise."""
        if not self.is_constant():
            raise DomainError(f"{self} is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    def leading_term(self, order=None):
        if not self._terms:
            raise DomainError("the zero polynomial has no leading term")
        key = (order or self.ring.order).key
        e = max(self._terms, key=key)
        return e, self._terms[e]

    def leading_monomial(self, order=None):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order=None):
        return self.leading_term(order)[1]

    def total_degree(self):
        return max((sum(e) for e in self._terms), default=None)

    def degree_in(self, name):
        i = self.table.index(name)
        return max((e[i] for e in self._terms), default=None)

    def variables(self):
        """Names of variables that actually occur."""
        used = set()
        for e in self._terms:
            used.update(i for i, x in enumerate(e) if x)
        return [self.table.vars[i].name for i in sorted(used)]

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), Fraction(0))

    # -- arithmetic
    def _other(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise StructuralError(f"{other.ring!r} does not match {self.ring!r}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.ring, out, _trusted=True)

    __rmul__ = __mul__

    def scalar_mul(self, c):
        c = as_rational(c)
        if not c:
            return self.ring.zero()
        return MultiPoly(self.ring, {e: c * v for e, v in self._terms.items()}, _trusted=True)

    def mul_monomial(self, exp, c=1):
        c = as_rational(c)
        if not c:
            return self.ring.zero()
        return MultiPoly(
            self.ring,
            {tuple(a + b for a, b in zip(e, exp)): c * v for e, v in self._terms.items()},
            _trusted=True,
        )

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("exponent must be a nonnegative integer")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self):
        if not self._terms:
            return self
        return self.scalar_mul(1 / self.leading_coefficient())

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == ({(0,) * self.ring.nvars: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    # -- evaluation and change of ring
    def evaluate(self, assignment):
        """Exact value under ``{name: rational}``; every occurring variable must be assigned."""
        values = {}
        for name in self.variables():
            if name not in assignment:
                raise DomainError(f"no value for variable {name!r}")
            values[self.table.index(name)] = as_rational(assignment[name])
        total = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for i, x in enumerate(e):
                if x:
                    t *= values[i] ** x
            total += t
        return total

    def substitute(self, mapping, ring=None):
        """Replace variables by polynomials of ``ring`` (default: own ring).

        Variables not in ``mapping`` are carried over by name into ``ring``.
        """
        ring = ring or self.ring
        images = []
        for v in self.table:
            if v.name in mapping:
                images.append(ring.coerce(mapping[v.name]))
            else:
                images.append(ring.var(v.name) if v.name in ring.table else None)
        out = ring.zero()
        for e, c in self._terms.items():
            t = ring.const(c)
            for i, x in enumerate(e):
                if x:
                    if images[i] is None:
                        raise StructuralError(f"variable {self.table.vars[i].name!r} has no image")
                    t = t * images[i] ** x
            out = out + t
        return out

    def embed(self, ring):
        """The same polynomial viewed in a ring whose table contains every used variable."""
        if ring == self.ring:
            return self
        pos = []
        for v in self.table:
            pos.append(ring.table.index(v.name) if v.name in ring.table else None)
        out = {}
        for e, c in self._terms.items():
            ne = [0] * ring.nvars
            for i, x in enumerate(e):
                if x:
                    if pos[i] is None:
                        raise StructuralError(
                            f"variable {self.table.vars[i].name!r} missing from target table"
                        )
                    ne[pos[i]] = x
            out[tuple(ne)] = c
        return MultiPoly(ring, out, _trusted=True)

    # -- rendering
    def __str__(self):
        return render_terms(self.terms(), self.table)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"


def render_monomial(exp, table):
    parts = []
    for i, x in enumerate(exp):
        if x == 1:
            parts.append(table.vars[i].name)
        elif x:
            parts.append(f"{table.vars[i].name}^{x}")
    return "*".join(parts)


def render_terms(terms, table):
    if not terms:
        return "0"
    out = []
    for n, (e, c) in enumerate(terms):
        mono = render_monomial(e, table)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if n == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
