import random

import pytest

from ufalg import PolyRing, UniPoly, VarTable, generic_monic, long_divide, parse_unipoly
from ufalg.errors import PreconditionError, StructuralError

from conftest import SYM_RING, random_unipoly

ROOT_RING = PolyRing(VarTable.from_names(["a0", "a1", "alpha"]))


def U(src, ring=SYM_RING):
    return parse_unipoly(src, ring=ring)


def test_cubic_by_generic_quadratic():
    q, r = long_divide(U("x^3 + a2*x^2 + a1*x + a0"), U("x^2 + b1*x + b0"))
    assert q == U("x + (a2 - b1)")
    assert r == U("(a1 - b0 - a2*b1 + b1^2)*x + (a0 - a2*b0 + b0*b1)")


def test_divide_by_one():
    f = U("a0*x^4 - 3*x + b1")
    q, r = long_divide(f, U("1"))
    assert q == f and r.is_zero() and r.degree is None


def test_divide_by_x_minus_alpha():
    f = U("x^2 + a1*x + a0", ROOT_RING)
    q, r = long_divide(f, U("x - alpha", ROOT_RING))
    assert q == U("x + (a1 + alpha)", ROOT_RING)
    assert r == U("alpha^2 + a1*alpha + a0", ROOT_RING)
    assert r[0] == f.evaluate_at(ROOT_RING.var("alpha"))


def test_rejects_non_monic_and_zero():
    with pytest.raises(PreconditionError):
        long_divide(U("x^2"), U("2*x + 1"))
    with pytest.raises(PreconditionError):
        long_divide(U("x^2"), U("a0*x + 1"))
    with pytest.raises(PreconditionError):
        long_divide(U("x^2"), U("0"))
    with pytest.raises(StructuralError):
        long_divide(U("x^2"), U("x", ROOT_RING))


def test_low_degree_dividend():
    q, r = long_divide(U("a0*x + 1"), U("x^2 + b0"))
    assert q.is_zero() and r == U("a0*x + 1")


def test_generic_monic():
    ring = SYM_RING
    assert generic_monic(0, ring) == U("1")
    assert generic_monic(1, ring) == U("x + b0")
    assert generic_monic(2, ring) == U("x^2 + b1*x + b0")
    with pytest.raises(StructuralError):
        generic_monic(3, ring)
    with pytest.raises(StructuralError):
        generic_monic(1, PolyRing(VarTable.from_names(["a0"])))


def test_rendering():
    assert str(U("x^3 + a2*x^2 + a1*x + a0")) == "x^3 + a2*x^2 + a1*x + a0"
    assert str(U("x + a2 - b1")) == "x + (-b1 + a2)"
    assert str(U("-x^2 - 3*x")) == "-x^2 - 3*x"
    assert str(U("0")) == "0"


def test_division_law_random():
    rng = random.Random(2024)
    for _ in range(300):
        dg = rng.randint(0, 4)
        g = random_unipoly(rng, SYM_RING, dg, monic=True)
        f_monic = rng.random() < 0.5
        f = random_unipoly(rng, SYM_RING, rng.randint(0, 8), monic=f_monic)
        q, r = long_divide(f, g)
        assert q * g + r == f
        assert r.is_zero() or r.degree < g.degree
        assert long_divide(q * g + r, g) == (q, r)
        if f_monic and f.degree >= g.degree:
            assert q.is_monic()
