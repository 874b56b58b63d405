"""Univariate gcd, squarefree parts and Kronecker factorization over Q.

Also splits the root adjunction ``Q[alpha]/<f(alpha)>`` into its local
pieces ``Q[alpha]/<p_i(alpha)^e_i>``.  Internally polynomials are ascending
lists of Fractions; the public surface speaks :class:`UniPoly`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import PresentedAlgebra
from .errors import DegreeBoundExceeded, DomainError, SearchLimitExceeded
from .multipoly import Block, PolyRing, Var
from .polydiv import UniPoly

DEFAULT_MAX_DEGREE = 8
DEFAULT_TUPLE_LIMIT = 10**6


# -- dense helpers ---------------------------------------------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _monic(p):
    p = _trim(p)
    if not p:
        return p
    lc = p[-1]
    return [c / lc for c in p]


def _divmod(f, g):
    f, g = _trim(f), _trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f) < len(g):
        return [], f
    rem = list(f)
    q = [Fraction(0)] * (len(f) - len(g) + 1)
    lc = g[-1]
    for d in range(len(f) - len(g), -1, -1):
        c = rem[d + len(g) - 1] / lc
        q[d] = c
        if c:
            for i, gc in enumerate(g):
                rem[d + i] -= c * gc
    return _trim(q), _trim(rem[: len(g) - 1])


def _mul(f, g):
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim(out)


def _deriv(f):
    return _trim([i * c for i, c in enumerate(f)][1:])


def _gcd(f, g):
    f, g = _trim(f), _trim(g)
    while g:
        f, g = g, _divmod(f, g)[1]
    return _monic(f)


def _eval(f, x):
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _coeffs(f):
    if isinstance(f, UniPoly):
        if not f.is_numeric():
            raise DomainError("factorization needs numeric rational coefficients")
        return [Fraction(c) for c in f.rational_coeffs()]
    return _trim([Fraction(c) for c in f])


def _uni(coeffs, ring=None):
    return UniPoly.from_rationals(coeffs, ring)


# -- public operations -----------------------------------------------------

def uni_gcd(f, g):
    """Monic gcd of two numeric polynomials by the Euclidean algorithm."""
    a, b = _coeffs(f), _coeffs(g)
    if not a and not b:
        raise DomainError("gcd(0, 0) is undefined")
    ring = f.ring if isinstance(f, UniPoly) else None
    return _uni(_gcd(a, b), ring)


def squarefree_decomposition(f):
    """``[(s_j, j), ...]`` with ``f = prod s_j^j``, each ``s_j`` squarefree, pairwise coprime.

    Yun's algorithm; parts equal to 1 are dropped.  Sorted by (degree, coefficients).
    """
    a = _monic(_coeffs(f))
    ring = f.ring if isinstance(f, UniPoly) else None
    if not a:
        raise DomainError("zero polynomial has no squarefree decomposition")
    out = []
    d = _deriv(a)
    g = _gcd(a, d)
    b = _divmod(a, g)[0]
    c = _divmod(d, g)[0]
    i = 1
    while len(b) > 1:
        dd = [x - y for x, y in itertools.zip_longest(c, _deriv(b), fillvalue=Fraction(0))]
        dd = _trim(dd)
        s = _gcd(b, dd) if dd else _monic(b)
        if len(s) > 1:
            out.append((s, i))
        b = _divmod(b, s)[0]
        c = _divmod(dd, s)[0] if dd else []
        i += 1
    out.sort(key=lambda t: (_sort_key(t[0]), t[1]))
    return [(_uni(s, ring), e) for s, e in out]


def evaluation_points():
    """0, 1, -1, 2, -2, ..."""
    yield 0
    n = 1
    while True:
        yield n
        yield -n
        n += 1


def _divisors(n):
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _interpolate(xs, ys):
    """Lagrange interpolation over Q; ascending coefficients."""
    result = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = _mul(basis, [Fraction(-xj), Fraction(1)])
                denom *= xi - xj
        scale = Fraction(yi) / denom
        term = [c * scale for c in basis]
        result = [
            a + b for a, b in itertools.zip_longest(result, term, fillvalue=Fraction(0))
        ]
    return _trim(result)


def _primitive_integer(f):
    """Scale ``f`` to an integer polynomial with content 1 and positive leading coefficient."""
    lcm = 1
    for c in f:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in f]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _find_factor(f, tuple_limit):
    """A monic factor of smallest possible degree >= 1 of monic ``f``, or None if irreducible."""
    n = len(f) - 1
    F = _primitive_integer(f)
    points = []
    values = []
    gen = evaluation_points()
    needed = n // 2 + 1
    while len(points) < needed:
        x = next(gen)
        v = _eval(F, x)
        if v == 0:
            return [Fraction(-x), Fraction(1)]
        points.append(x)
        values.append(int(v))
    for d in range(1, n // 2 + 1):
        xs, vs = points[: d + 1], values[: d + 1]
        divs = [_divisors(v) for v in vs]
        count = 1
        for i, ds in enumerate(divs):
            count *= len(ds) * (1 if i == 0 else 2)
        if count > tuple_limit:
            raise SearchLimitExceeded(
                f"Kronecker search for degree {d} needs {count} divisor tuples (limit {tuple_limit})"
            )
        signed = [ds if i == 0 else [s * x for x in ds for s in (1, -1)] for i, ds in enumerate(divs)]
        for ys in itertools.product(*signed):
            cand = _interpolate(xs, ys)
            if len(cand) - 1 != d:
                continue
            if any(c.denominator != 1 for c in cand):
                continue
            q, r = _divmod(f, cand)
            if not r:
                return _monic(cand)
    return None


def _factor_squarefree(f, tuple_limit):
    factors = []
    stack = [_monic(f)]
    while stack:
        p = stack.pop()
        if len(p) <= 1:
            continue
        if len(p) == 2:
            factors.append(p)
            continue
        found = _find_factor(p, tuple_limit)
        if found is None:
            factors.append(p)
        else:
            factors.append(found)
            stack.append(_divmod(p, found)[0])
    return factors


def _sort_key(p):
    return len(p), tuple(reversed(p))


@dataclass(frozen=True)
class FactorList:
    """``f = unit * prod p_i^e_i`` with monic irreducible, pairwise distinct ``p_i``."""

    factors: tuple
    unit: Fraction = Fraction(1)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def expand(self):
        ring = self.factors[0][0].ring if self.factors else PolyRing(())
        out = UniPoly(ring, [ring.const(self.unit)])
        for p, e in self.factors:
            out = out * p ** e
        return out


def kronecker_factor(f, max_degree=DEFAULT_MAX_DEGREE, tuple_limit=DEFAULT_TUPLE_LIMIT):
    """Complete factorization of a numeric polynomial over Q by Kronecker's method.

    Squarefree parts are factored separately.  Candidate factors of degree d
    are interpolated through divisors of f's values at the first d+1 points
    of 0, 1, -1, 2, -2, ...; a point where f vanishes yields a linear factor
    directly.
    """
    coeffs = _coeffs(f)
    ring = f.ring if isinstance(f, UniPoly) else None
    if not coeffs:
        raise DomainError("cannot factor the zero polynomial")
    n = len(coeffs) - 1
    if n > max_degree:
        raise DegreeBoundExceeded(f"degree {n} exceeds the factorization bound {max_degree}")
    unit = coeffs[-1]
    found = []
    for part, e in squarefree_decomposition(_uni(coeffs)):
        for p in _factor_squarefree(part.rational_coeffs(), tuple_limit):
            found.append((p, e))
    found.sort(key=lambda t: (_sort_key(t[0]), t[1]))
    return FactorList(tuple((_uni(p, ring), e) for p, e in found), unit)


def is_irreducible(f, tuple_limit=DEFAULT_TUPLE_LIMIT):
    """True when no monic factor of degree 1 <= d <= deg/2 exists."""
    coeffs = _monic(_coeffs(f))
    if len(coeffs) <= 1:
        return False
    if len(coeffs) == 2:
        return True
    return _find_factor(coeffs, tuple_limit) is None


@dataclass(frozen=True)
class LocalFactor:
    """``Q[alpha]/<p(alpha)^e>``, a local algebra with residue field ``Q[alpha]/<p(alpha)>``."""

    algebra: PresentedAlgebra
    residue_poly: UniPoly
    multiplicity: int

    @property
    def dimension(self):
        return self.multiplicity * self.residue_poly.degree

    @property
    def residue_dimension(self):
        return self.residue_poly.degree


def crt_decompose_root_adjunction(f, max_degree=DEFAULT_MAX_DEGREE, tuple_limit=DEFAULT_TUPLE_LIMIT):
    """Local pieces of ``Q[alpha]/<f(alpha)>`` for a monic numeric ``f``."""
    if isinstance(f, UniPoly) and not f.is_monic():
        raise DomainError(f"{f} is not monic")
    factors = kronecker_factor(f, max_degree, tuple_limit)
    ring = PolyRing([Var("alpha", Block.ROOT)])
    alpha = ring.var("alpha")
    out = []
    for p, e in factors:
        pe = (p ** e).rational_coeffs()
        rel = UniPoly.from_rationals(pe, ring).evaluate_at(alpha)
        algebra = PresentedAlgebra(ring, [rel], name=f"Q[alpha]/<({p})^{e}>")
        out.append(LocalFactor(algebra, p, e))
    return out
