import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from ufalg import PolyRing, UniPoly, VarTable

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SYM_TABLE = VarTable.from_names(["a0", "a1", "a2", "b0", "b1"])
SYM_RING = PolyRing(SYM_TABLE)
QQ = PolyRing(())


@pytest.fixture
def sym_ring():
    return SYM_RING


def monomials(nvars, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


def multipolys(ring=SYM_RING, max_terms=4, max_exp=3, coeff=st.integers(-9, 9)):
    return st.dictionaries(monomials(ring.nvars, max_exp), coeff, max_size=max_terms).map(
        lambda d: ring.zero() + sum((ring.monomial(e, c) for e, c in d.items()), ring.zero())
    )


def random_multipoly(rng, ring, max_terms=3, max_exp=2, lo=-5, hi=5):
    p = ring.zero()
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(ring.nvars))
        p = p + ring.monomial(e, rng.randint(lo, hi))
    return p


def random_unipoly(rng, ring, deg, monic=False, **kw):
    cs = [random_multipoly(rng, ring, **kw) for _ in range(deg)]
    lead = ring.one() if monic else random_multipoly(rng, ring, **kw)
    if lead.is_zero():
        lead = ring.const(rng.choice([-3, -2, -1, 1, 2, 3]))
    return UniPoly(ring, cs + [lead])


def rational_poly(coeffs):
    return UniPoly.from_rationals([Fraction(c) for c in coeffs])


# -- factorization oracle ----------------------------------------------------

def _divisors(n):
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def has_rational_root(coeffs):
    """Rational root test on an integer polynomial (ascending coefficients)."""
    if coeffs[0] == 0:
        return True
    for p in _divisors(coeffs[0]):
        for q in _divisors(coeffs[-1]):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * r**i for i, c in enumerate(coeffs)) == 0:
                    return True
    return False


def random_irreducible(rng, deg):
    """Monic integer polynomial of degree <= 3 with no rational root, hence irreducible."""
    while True:
        coeffs = [rng.randint(-6, 6) for _ in range(deg)] + [1]
        if deg == 1 or not has_rational_root(coeffs):
            return coeffs


# -- acceptance reporting ----------------------------------------------------

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    def record(number, title, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
        _ACCEPTANCE.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
