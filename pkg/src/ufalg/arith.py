"""Exact rational arithmetic, p-adic valuations and binomial coefficients.

Rationals are :class:`fractions.Fraction`, which is always stored in lowest
terms with a positive denominator, so equality and hashing are structural.
"""

from fractions import Fraction
import math

from .errors import DomainError

Rational = Fraction


def as_rational(value):
    """Coerce ints, strings like ``"3/4"`` and Fractions to a Rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot make a rational from {type(value).__name__}")


def is_prime(p):
    """Trial division; arguments here are small."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def primes_dividing(n):
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def nu_p(p, n):
    """Return the exponent of the prime ``p`` in the nonzero integer ``n``."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n == 0:
        raise DomainError("valuation of 0 is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def binomial(n, k):
    """Exact C(n, k), zero when k > n."""
    if n < 0 or k < 0:
        raise DomainError("binomial arguments must be nonnegative")
    return math.comb(n, k)


def valuation_drop_holds(n, p):
    """Check nu_p(C(n, p)) < nu_p(n) for a prime p dividing n."""
    if n < 1:
        raise DomainError("n must be positive")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n % p:
        raise DomainError(f"{p} does not divide {n}")
    return nu_p(p, binomial(n, p)) < nu_p(p, n)


def valuation_sweep(max_n):
    """Yield ``(n, p, nu_p(C(n,p)), nu_p(n), holds)`` for 1 <= n <= max_n, p | n."""
    for n in range(1, max_n + 1):
        for p in primes_dividing(n):
            lhs = nu_p(p, binomial(n, p))
            rhs = nu_p(p, n)
            yield n, p, lhs, rhs, lhs < rhs
