"""Buchberger's algorithm, normal forms and standard monomials over Q.

The inner loops run on plain ``{exponent: Fraction}`` dicts; the public
functions take and return :class:`MultiPoly` values.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction

from .errors import StructuralError
from .multipoly import Block, MultiPoly

INFINITE = math.inf


def _divides(u, v):
    return all(a <= b for a, b in zip(u, v))


def _lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def _reduce(p, basis, key, tail=True):
    """Divide dict ``p`` by ``basis`` (pairs ``(lm, monic dict)``); return the remainder dict.

    With ``tail=False`` stop as soon as the leading term is irreducible.
    """
    p = dict(p)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in basis:
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                for e, v in g.items():
                    ne = tuple(a + b for a, b in zip(e, shift))
                    s = p.get(ne, 0) - c * v
                    if s:
                        p[ne] = s
                    else:
                        del p[ne]
                break
        else:
            if not tail:
                rem.update(p)
                return rem
            rem[m] = c
            del p[m]
    return rem


def _monic(p, key):
    lm = max(p, key=key)
    inv = 1 / p[lm]
    return lm, {e: c * inv for e, c in p.items()}


def _spoly(f, g, key):
    lf, df = f
    lg, dg = g
    lcm = _lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out = {}
    for e, c in df.items():
        out[tuple(a + b for a, b in zip(e, sf))] = c
    for e, c in dg.items():
        ne = tuple(a + b for a, b in zip(e, sg))
        s = out.get(ne, 0) - c
        if s:
            out[ne] = s
        else:
            out.pop(ne, None)
    return out


class GroebnerBasis:
    """A reduced Groebner basis: monic, inter-reduced, sorted by descending leading monomial."""

    __slots__ = ("ring", "elements", "_pairs")

    def __init__(self, ring, elements):
        self.ring = ring
        self.elements = tuple(elements)
        key = ring.order.key
        self._pairs = [(g.leading_monomial(), g.as_dict()) for g in self.elements]
        self._pairs.sort(key=lambda t: key(t[0]), reverse=True)

    @property
    def order(self):
        return self.ring.order

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if isinstance(other, GroebnerBasis):
            return self.ring == other.ring and self.elements == other.elements
        return NotImplemented

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.elements))}])"

    def leading_monomials(self):
        return [lm for lm, _ in self._pairs]

    def is_unit_ideal(self):
        return len(self.elements) == 1 and self.elements[0] == 1

    def reduce(self, p):
        return normal_form(p, self)

    def contains(self, p):
        return normal_form(p, self).is_zero()


def buchberger(generators, ring=None, chain_criterion=True):
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Pairs are processed by the normal strategy: smallest total degree of the
    lcm first, ties broken by the (i, j) insertion indices.  Pairs with
    coprime leading monomials are skipped.  ``chain_criterion`` enables
    Buchberger's second criterion as well; it changes the work done, never
    the result.
    """
    generators = list(generators)
    if ring is None:
        if not generators:
            raise StructuralError("need a ring for an empty generator list")
        ring = generators[0].ring
    for g in generators:
        if g.ring != ring:
            raise StructuralError(f"{g.ring!r} does not match {ring!r}")
    key = ring.order.key

    basis = []
    for g in generators:
        if g.is_zero():
            continue
        r = _reduce(g.as_dict(), basis, key)
        if r:
            basis.append(_monic(r, key))

    pairs = []
    pending = set()

    def push(i, j):
        lcm = _lcm(basis[i][0], basis[j][0])
        heapq.heappush(pairs, (sum(lcm), i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    while pairs:
        if any(not any(lm) for lm, _ in basis):
            break
        _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        li, lj = basis[i][0], basis[j][0]
        if all(not (a and b) for a, b in zip(li, lj)):
            continue
        if chain_criterion:
            lcm = _lcm(li, lj)
            skip = False
            for t, (lt, _) in enumerate(basis):
                if t in (i, j) or not _divides(lt, lcm):
                    continue
                if (min(i, t), max(i, t)) not in pending and (min(j, t), max(j, t)) not in pending:
                    skip = True
                    break
            if skip:
                continue
        r = _reduce(_spoly(basis[i], basis[j], key), basis, key)
        if r:
            basis.append(_monic(r, key))
            n = len(basis) - 1
            for t in range(n):
                push(t, n)

    return GroebnerBasis(ring, _interreduce(basis, ring))


def _interreduce(basis, ring):
    key = ring.order.key
    for lm, g in basis:
        if not any(lm):
            return [ring.one()]
    minimal = []
    for idx, (lm, g) in enumerate(basis):
        dominated = False
        for jdx, (lm2, _) in enumerate(basis):
            if jdx == idx or not _divides(lm2, lm):
                continue
            if lm2 != lm or jdx < idx:
                dominated = True
                break
        if not dominated:
            minimal.append((lm, g))
    reduced = []
    for idx, (lm, g) in enumerate(minimal):
        others = [pair for jdx, pair in enumerate(minimal) if jdx != idx]
        r = _reduce(g, others, key)
        reduced.append(MultiPoly(ring, r, _trusted=True))
    reduced.sort(key=lambda p: key(p.leading_monomial()), reverse=True)
    return reduced


def normal_form(p, gb):
    """Fully reduced remainder of ``p`` modulo a GroebnerBasis (or a list of polynomials)."""
    if isinstance(gb, GroebnerBasis):
        ring, pairs = gb.ring, gb._pairs
    else:
        gb = [g for g in gb if not g.is_zero()]
        ring = gb[0].ring if gb else p.ring
        pairs = [_monic(g.as_dict(), ring.order.key) for g in gb]
    if p.ring != ring:
        raise StructuralError(f"{p.ring!r} does not match {ring!r}")
    return MultiPoly(ring, _reduce(p.as_dict(), pairs, ring.order.key), _trusted=True)


def s_polynomial(f, g):
    key = f.ring.order.key
    return MultiPoly(f.ring, _spoly(_monic(f.as_dict(), key), _monic(g.as_dict(), key), key), _trusted=True)


def all_s_polynomials_reduce(gb):
    """Buchberger's criterion: every S-polynomial of the basis reduces to zero."""
    els = list(gb.elements)
    for j in range(len(els)):
        for i in range(j):
            if not normal_form(s_polynomial(els[i], els[j]), gb).is_zero():
                return False
    return True


def is_reduced(gb):
    """Monic, no leading monomial divides another, no term divisible by another's leading monomial."""
    lms = gb.leading_monomials()
    for g in gb.elements:
        lm, lc = g.leading_term()
        if lc != 1:
            return False
        for other in lms:
            if other == lm:
                continue
            if any(_divides(other, e) for e in g.as_dict()):
                return False
    return len(set(lms)) == len(lms)


def _select(ring, block):
    if block is None:
        return list(range(ring.nvars))
    blocks = {block} if isinstance(block, Block) else set(block)
    return [i for i, v in enumerate(ring.table.vars) if v.block in blocks]


def standard_monomials(gb, block=None):
    """Monomials (in the selected block's variables) divisible by no leading monomial.

    ``block`` may be a :class:`Block`, a collection of blocks, or ``None``
    for all variables.  Only leading monomials supported on the selected
    variables take part.  Returns ``INFINITE`` when the set is infinite.
    Output is sorted ascending in the ring's order.
    """
    ring = gb.ring
    sel = _select(ring, block)
    selset = set(sel)
    lms = [
        lm for lm in gb.leading_monomials()
        if all(x == 0 for i, x in enumerate(lm) if i not in selset)
    ]
    if any(not any(lm) for lm in lms):
        return []
    bounds = {}
    for i in sel:
        pure = [lm[i] for lm in lms if lm[i] and all(x == 0 for t, x in enumerate(lm) if t != i)]
        if not pure:
            return INFINITE
        bounds[i] = min(pure)
    out = []
    exp = [0] * ring.nvars

    def walk(pos):
        if pos == len(sel):
            e = tuple(exp)
            if not any(_divides(lm, e) for lm in lms):
                out.append(e)
            return
        i = sel[pos]
        for x in range(bounds[i]):
            exp[i] = x
            # prune: a prefix already divisible stays divisible
            e = tuple(exp)
            if any(_divides(lm, e) for lm in lms):
                break
            walk(pos + 1)
        exp[i] = 0

    walk(0)
    out.sort(key=ring.order.key)
    return out
