from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ufalg.arith import as_rational, binomial, is_prime, nu_p, primes_dividing, valuation_drop_holds
from ufalg.errors import DomainError


def pascal(n, k):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k] if k <= n else 0


def valuation_by_powers(p, n):
    e = 0
    while n % p ** (e + 1) == 0:
        e += 1
    return e


def test_rational_is_reduced():
    r = as_rational("6/8")
    assert (r.numerator, r.denominator) == (3, 4)
    assert as_rational(0) == Fraction(0, 1)
    assert as_rational(Fraction(-2, -4)).denominator == 2


@pytest.mark.parametrize("p, n, expected", [(3, 1, 0), (2, 12, 2), (3, 84, 1)])
def test_nu_p_examples(p, n, expected):
    assert valuation_by_powers(p, n) == expected
    assert nu_p(p, n) == expected


@pytest.mark.parametrize("p, n", [(4, 12), (1, 5), (2, 0)])
def test_nu_p_domain(p, n):
    with pytest.raises(DomainError):
        nu_p(p, n)


@pytest.mark.parametrize("n, k, expected", [(7, 0, 1), (3, 2, 3), (6, 3, 20), (3, 5, 0)])
def test_binomial_examples(n, k, expected):
    assert pascal(n, k) == expected
    assert binomial(n, k) == expected


@pytest.mark.parametrize("n, p", [(4, 2), (6, 2), (9, 3)])
def test_valuation_drop_examples(n, p):
    assert valuation_by_powers(p, pascal(n, p)) < valuation_by_powers(p, n)
    assert valuation_drop_holds(n, p) is True


def test_valuation_drop_requires_divisibility():
    with pytest.raises(DomainError):
        valuation_drop_holds(9, 2)
    with pytest.raises(DomainError):
        valuation_drop_holds(8, 4)


def test_valuation_drop_sweep():
    for n in range(1, 1001):
        for p in primes_dividing(n):
            assert valuation_drop_holds(n, p), (n, p)


def test_primes_dividing_matches_trial_primality():
    for n in range(2, 300):
        expected = [p for p in range(2, n + 1) if n % p == 0 and all(p % d for d in range(2, p))]
        assert primes_dividing(n) == expected
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


nonzero = st.integers(-10**6, 10**6).filter(bool)


@given(st.sampled_from([2, 3, 5, 7]), nonzero, nonzero)
def test_nu_p_additive(p, a, b):
    assert nu_p(p, a * b) == nu_p(p, a) + nu_p(p, b)


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_symmetry(n, k):
    if k <= n:
        assert binomial(n, k) == binomial(n, n - k)
