"""Finitely presented commutative Q-algebras and their dimensions."""

from __future__ import annotations

import threading

from .errors import BasisNotCertified
from .groebner import INFINITE, buchberger, standard_monomials
from .multipoly import Block, render_monomial

ADJOINED = (Block.FACTOR, Block.ROOT)


class PresentedAlgebra:
    """``Q[table] / <generators>``.

    Coefficient-block variables, when present, are the base ring
    ``R = Q[a...]``; the factor and root variables are what was adjoined.  The
    Groebner basis, standard monomials and dimension are computed lazily and
    cached; concurrent first calls compute the same values, so the racy
    fill is harmless.
    """

    def __init__(self, ring, generators, name=None, notes=None):
        self.ring = ring
        self.generators = tuple(g.embed(ring) for g in generators if not g.is_zero())
        self.name = name
        self.notes = dict(notes or {})
        self._gb = None
        self._basis = None
        self._lock = threading.Lock()

    def __repr__(self):
        label = self.name or "PresentedAlgebra"
        return f"<{label} over {self.base_description()} with {len(self.generators)} generators>"

    @property
    def table(self):
        return self.ring.table

    def coefficient_variables(self):
        return [v.name for v in self.table if v.block is Block.COEFFICIENT]

    def is_symbolic(self):
        return bool(self.coefficient_variables())

    def base_description(self):
        cv = self.coefficient_variables()
        return f"Q[{', '.join(cv)}]" if cv else "Q"

    def groebner(self):
        if self._gb is None:
            gb = buchberger(self.generators, self.ring)
            with self._lock:
                if self._gb is None:
                    self._gb = gb
        return self._gb

    def is_zero_ring(self):
        return self.groebner().is_unit_ideal()

    def certify(self):
        """Raise BasisNotCertified unless the adjoined standard monomials form a free basis over R.

        Every basis element must have a constant coefficient on its leading
        monomial in the adjoined variables, and no element may lie in R alone
        (other than the unit, which makes the algebra the zero ring).
        """
        if not self.is_symbolic():
            return
        gb = self.groebner()
        if gb.is_unit_ideal():
            return
        adj = [i for i, v in enumerate(self.table.vars) if v.block in ADJOINED]
        for g in gb:
            lm = g.leading_monomial()
            top = tuple(lm[i] for i in adj)
            if not any(top):
                raise BasisNotCertified(f"relation {g} lies in the base ring {self.base_description()}")
            same = [e for e in g.as_dict() if tuple(e[i] for i in adj) == top]
            if len(same) != 1 or any(lm[i] for i in range(len(lm)) if i not in adj):
                raise BasisNotCertified(
                    f"leading coefficient of {g} in the adjoined variables is not a unit"
                )

    def basis(self):
        """Standard monomials spanning the algebra over its base ring, or INFINITE."""
        if self._basis is None:
            self.certify()
            gb = self.groebner()
            block = ADJOINED if self.is_symbolic() else None
            self._basis = standard_monomials(gb, block)
        return self._basis

    def dimension(self):
        """Rank over the base ring (Q in the numeric case); INFINITE if not finite."""
        b = self.basis()
        return INFINITE if b is INFINITE else len(b)

    def basis_names(self):
        b = self.basis()
        if b is INFINITE:
            return None
        return [render_monomial(e, self.table) or "1" for e in b]

    def normal_form(self, p):
        return self.groebner().reduce(p.embed(self.ring))


def algebra_dimension(algebra):
    return algebra.dimension()


def is_zero_ring(algebra):
    return algebra.is_zero_ring()
