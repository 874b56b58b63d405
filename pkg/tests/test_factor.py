import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ufalg import DegreeBoundExceeded, DomainError, SearchLimitExceeded, parse_unipoly
from ufalg.factor import (
    crt_decompose_root_adjunction, evaluation_points, is_irreducible, kronecker_factor,
    squarefree_decomposition, uni_gcd,
)

from conftest import random_irreducible, rational_poly


def test_gcd_examples():
    assert uni_gcd(parse_unipoly("x^2 - 1"), parse_unipoly("x^2 - 2*x + 1")) == parse_unipoly("x - 1")
    assert uni_gcd(parse_unipoly("x^2 + 1"), parse_unipoly("x + 3")) == parse_unipoly("1")
    assert uni_gcd(parse_unipoly("0"), parse_unipoly("3*x - 6")) == parse_unipoly("x - 2")
    with pytest.raises(DomainError):
        uni_gcd(parse_unipoly("0"), parse_unipoly("0"))


def test_squarefree_examples():
    f = parse_unipoly("x^5 - x^4 - 2*x^3 + 2*x^2 + x - 1")
    assert [(str(p), e) for p, e in squarefree_decomposition(f)] == [("x - 1", 3), ("x + 1", 2)]
    assert [(str(p), e) for p, e in squarefree_decomposition(parse_unipoly("x^2 + 1"))] == [("x^2 + 1", 1)]
    assert squarefree_decomposition(parse_unipoly("5")) == []


def test_evaluation_points_order():
    gen = evaluation_points()
    assert [next(gen) for _ in range(7)] == [0, 1, -1, 2, -2, 3, -3]


@pytest.mark.parametrize("src,expected", [
    ("x^4 - 1", [("x - 1", 1), ("x + 1", 1), ("x^2 + 1", 1)]),
    ("x^4 + 4", [("x^2 - 2*x + 2", 1), ("x^2 + 2*x + 2", 1)]),
    ("x^3 - 2", [("x^3 - 2", 1)]),
    ("x^3 - x^2 - x + 1", [("x - 1", 2), ("x + 1", 1)]),
    ("x^6 - 1", [("x - 1", 1), ("x + 1", 1), ("x^2 - x + 1", 1), ("x^2 + x + 1", 1)]),
    ("x^2 - 1/4", [("x - 1/2", 1), ("x + 1/2", 1)]),
])
def test_kronecker_examples(src, expected):
    f = parse_unipoly(src)
    fl = kronecker_factor(f)
    assert [(str(p), e) for p, e in fl] == expected
    assert fl.expand() == f


def test_unit_is_kept():
    fl = kronecker_factor(parse_unipoly("2*x^2 - 8"))
    assert fl.unit == 2
    assert fl.expand() == parse_unipoly("2*x^2 - 8")


def test_irreducibility():
    assert is_irreducible(parse_unipoly("x^2 + 1"))
    assert is_irreducible(parse_unipoly("x^4 + 1"))
    assert not is_irreducible(parse_unipoly("x^4 + 4"))
    assert not is_irreducible(parse_unipoly("3"))
    assert is_irreducible(parse_unipoly("2*x + 1"))


def test_bounds():
    with pytest.raises(DegreeBoundExceeded):
        kronecker_factor(parse_unipoly("x^9 + 1"))
    assert len(kronecker_factor(parse_unipoly("x^9 - 1"), max_degree=9)) == 3
    with pytest.raises(SearchLimitExceeded):
        kronecker_factor(parse_unipoly("x^6 + 720720*x + 720720"), tuple_limit=10)
    with pytest.raises(DomainError):
        kronecker_factor(parse_unipoly("0"))
    with pytest.raises(DomainError):
        kronecker_factor(parse_unipoly("x^2 + a0"))


def test_random_products_of_irreducibles():
    rng = random.Random(7)
    for _ in range(15):
        parts = []
        total = 0
        while True:
            d = rng.randint(1, 3)
            if total + d > 6:
                break
            parts.append(random_irreducible(rng, d))
            total += d
        f = rational_poly([1])
        for p in parts:
            f = f * rational_poly(p)
        fl = kronecker_factor(f)
        assert fl.expand() == f
        expected = {}
        for p in parts:
            key = tuple(Fraction(c) for c in p)
            expected[key] = expected.get(key, 0) + 1
        assert {tuple(p.rational_coeffs()): e for p, e in fl} == expected


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_squarefree_iff_coprime_to_derivative(lower):
    f = rational_poly(lower + [1])
    squarefree = all(e == 1 for _, e in squarefree_decomposition(f))
    assert squarefree == (uni_gcd(f, f.derivative()).degree == 0)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_factorization_reexpands(lower):
    f = rational_poly(lower + [1])
    fl = kronecker_factor(f)
    assert fl.expand() == f
    assert all(is_irreducible(p) for p, _ in fl)


@pytest.mark.parametrize("src,dims", [
    ("x^3 - x^2 - x + 1", [(1, 2), (1, 1)]),
    ("x^4 - 1", [(1, 1), (1, 1), (2, 2)]),
    ("x^2 + 1", [(2, 2)]),
])
def test_crt_examples(src, dims):
    f = parse_unipoly(src)
    pieces = crt_decompose_root_adjunction(f)
    assert [(lf.residue_dimension, lf.dimension) for lf in pieces] == dims
    assert sum(lf.algebra.dimension() for lf in pieces) == f.degree
    for lf in pieces:
        assert lf.algebra.dimension() == lf.dimension


def test_crt_needs_monic():
    with pytest.raises(DomainError):
        crt_decompose_root_adjunction(parse_unipoly("2*x^2 + 1"))
