"""Universal algebras in which a monic polynomial acquires a monic factor.

For monic ``f`` of degree ``n`` over ``R`` and ``k >= 0``, divide ``f`` by the
generic ``g = x^k + b_{k-1} x^{k-1} + ... + b_0`` and quotient
``R[b_0, ..., b_{k-1}]`` by the coefficients of the remainder.  Over a field
the result has dimension ``C(n, k) * dim R``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import PresentedAlgebra
from .errors import DomainError, PreconditionError
from .multipoly import Block, Var
from .polydiv import UniPoly, factor_var_names, generic_monic, long_divide

ROOT = "alpha"


@dataclass(frozen=True)
class FactorizationRecord:
    """``f = h*g + r`` with ``g`` generic of degree ``k``; the algebra kills the coefficients of ``r``."""

    f: UniPoly
    k: int
    divisor: UniPoly
    cofactor: UniPoly
    remainder: UniPoly
    algebra: PresentedAlgebra


def _check_base(f):
    if not f.is_monic():
        raise PreconditionError(f"{f} is not monic")
    for c in f.coeffs:
        for name in c.variables():
            if f.ring.table.vars[f.ring.table.index(name)].block is not Block.COEFFICIENT:
                raise PreconditionError(f"coefficient variable {name!r} is not in the coefficient block")


def build_universal_factor_algebra(f, k, prefix="b", order=None):
    """The algebra R_{f,k} together with the division that defines it."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    _check_base(f)
    ring = f.ring.extend(Var(n, Block.FACTOR) for n in factor_var_names(k, prefix))
    if order is not None:
        ring = ring.with_order(order)
    g = generic_monic(k, ring, prefix)
    h, r = long_divide(f.embed(ring), g)
    algebra = PresentedAlgebra(ring, r.coeffs, name=f"R_(f,{k})")
    return FactorizationRecord(f, k, g, h, r, algebra)


def root_division(f, root=ROOT, order=None):
    """Divide ``f`` by ``x - alpha`` over ``R[alpha]``; the remainder is the constant ``f(alpha)``."""
    _check_base(f)
    ring = f.ring.extend([Var(root, Block.ROOT)])
    if order is not None:
        ring = ring.with_order(order)
    g = UniPoly(ring, [-ring.var(root), ring.one()])
    q, r = long_divide(f.embed(ring), g)
    return g, q, r


def build_root_adjunction(f, root=ROOT, order=None):
    """``R[alpha] / <f(alpha)>``: free over R with basis ``1, alpha, ..., alpha^(n-1)``.

    This uses the root convention ``x - alpha``; the factor convention
    ``x + b0`` of :func:`build_universal_factor_algebra` with ``k = 1`` is the
    same algebra under ``alpha = -b0``.
    """
    if f.degree is None or f.degree < 1:
        raise PreconditionError("root adjunction needs degree >= 1")
    g, q, r = root_division(f, root, order)
    return PresentedAlgebra(
        g.ring, r.coeffs, name="R_(f,1)", notes={"variable_map": {root: "-b0"}}
    )


def adjoin_root_of(algebra, p, root=ROOT):
    """Adjoin a root of the monic ``p`` (over ``algebra``'s ring) to ``algebra``."""
    if not p.is_monic():
        raise PreconditionError(f"{p} is not monic")
    ring = algebra.ring.extend([Var(root, Block.ROOT)])
    rel = p.embed(ring).evaluate_at(ring.var(root))
    return PresentedAlgebra(ring, list(algebra.generators) + [rel])


def build_S1_S2(f, k, order=None):
    """Both sides of the inductive dimension count.

    S1 adjoins a root of the generic degree-k divisor to R_{f,k}; S2 adjoins a
    root of the cofactor of the generic degree-(k-1) divisor to R_{f,k-1}.
    Both classify a degree-k monic factor together with a linear factor of it.
    """
    if not f.is_numeric():
        raise DomainError("S1/S2 dimensions need numeric rational coefficients")
    if f.degree is None or not 1 <= k <= f.degree:
        raise DomainError(f"k must satisfy 1 <= k <= deg f, got k={k}")
    rec = build_universal_factor_algebra(f, k, order=order)
    s1 = adjoin_root_of(rec.algebra, rec.divisor)
    s1.name = "S1"
    prev = build_universal_factor_algebra(f, k - 1, order=order)
    s2 = adjoin_root_of(prev.algebra, prev.cofactor)
    s2.name = "S2"
    return s1, s2


def shortcut_difference(f):
    """``b0*f - q1*g`` with ``g = x^2 + b1 x + b0`` and ``q1 = b0 x + a0``.

    ``q1*g`` agrees with ``b0*f`` in the top and bottom coefficients, so only
    the ``x^2`` and ``x`` coefficients survive.
    """
    if f.degree != 3:
        raise DomainError("the shortcut applies to cubics only")
    _check_base(f)
    ring = f.ring.extend([Var("b0", Block.FACTOR), Var("b1", Block.FACTOR)])
    fe = f.embed(ring)
    g = generic_monic(2, ring)
    b0 = ring.var("b0")
    q1 = UniPoly(ring, [fe[0], b0])
    return fe * b0 - q1 * g


def third_relation_shortcut(f):
    """The x-coefficient of :func:`shortcut_difference`: ``a1*b0 - b0^2 - a0*b1`` for the generic cubic."""
    return shortcut_difference(f)[1]
