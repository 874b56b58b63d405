"""Double-precision ingredients: complex square roots, quadratics, odd-degree real roots."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .polydiv import UniPoly

DEFAULT_TOL = 1e-12


def _finite(*values):
    for v in values:
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise DomainError(f"non-finite input {v!r}")


def complex_sqrt(z):
    """Principal square root ``c + d*i`` of ``z = a + b*i`` (``c >= 0``).

    For ``b != 0``, ``y = (a + |z|)/2 > 0``, ``c = sqrt(y)`` and
    ``d = b/(2c)``.  When ``a < 0`` that sum cancels, so ``d`` is taken from
    ``(-a + |z|)/2`` and ``c = b/(2d)`` instead.  For ``b == 0`` and ``a < 0``
    the result is ``(0, sqrt(-a))``.
    """
    z = complex(z)
    _finite(z)
    a, b = z.real, z.imag
    if b == 0:
        if a >= 0:
            return complex(math.sqrt(a), 0.0)
        return complex(0.0, math.sqrt(-a))
    r = math.hypot(a, b)
    if a >= 0:
        c = math.sqrt((a + r) / 2)
        d = b / (2 * c)
    else:
        d = math.copysign(math.sqrt((r - a) / 2), b)
        c = b / (2 * d)
    return complex(c, d)


def quadratic_roots(b, c):
    """Both roots of ``x^2 + b x + c`` via the shift ``x = t - b/2``, which leaves ``t^2 = b^2/4 - c``."""
    b, c = complex(b), complex(c)
    _finite(b, c)
    w = complex_sqrt(b * b / 4 - c)
    return -b / 2 + w, -b / 2 - w


def quadratic_residual_ok(b, c, root, tol=1e-9):
    b, c = complex(b), complex(c)
    return abs(root * root + b * root + c) <= tol * (1 + abs(b) + abs(c))


def cauchy_bound(coeffs):
    """``1 + max |a_i / a_n|`` for ascending ``coeffs``; bounds every real root."""
    lead = coeffs[-1]
    return 1 + max((abs(Fraction(a) / lead) for a in coeffs[:-1]), default=Fraction(0))


@dataclass
class Bisection:
    root: float
    iterations: int
    initial: tuple
    bracket: tuple
    widths: list = field(default_factory=list)


def horner(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def bisect(fn, lo, hi, tol=DEFAULT_TOL, xtol=0.0, max_iter=10_000):
    """Bisection on a sign change of ``fn`` over ``[lo, hi]``.

    Stops when ``|fn(mid)| <= tol``, when the bracket is no wider than
    ``xtol``, or when the midpoint can no longer split it in doubles.
    """
    initial = (lo, hi)
    flo, fhi = fn(lo), fn(hi)
    if flo == 0:
        return Bisection(lo, 0, initial, (lo, hi))
    if fhi == 0:
        return Bisection(hi, 0, initial, (lo, hi))
    if (flo > 0) == (fhi > 0):
        raise DomainError("no sign change on the bracket")
    widths = [hi - lo]
    best, best_val = (lo, abs(flo)) if abs(flo) <= abs(fhi) else (hi, abs(fhi))
    for it in range(1, max_iter + 1):
        mid = lo + (hi - lo) / 2
        if not lo < mid < hi:
            return Bisection(best, it - 1, initial, (lo, hi), widths)
        fm = fn(mid)
        if abs(fm) < best_val:
            best, best_val = mid, abs(fm)
        if abs(fm) <= tol:
            return Bisection(mid, it, initial, (lo, hi), widths)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
        widths.append(hi - lo)
        if hi - lo <= xtol:
            return Bisection(best, it, initial, (lo, hi), widths)
    return Bisection(best, max_iter, initial, (lo, hi), widths)


def odd_degree_real_root(f, tol=DEFAULT_TOL, xtol=0.0):
    """A real root of an odd-degree numeric polynomial, by bisection on ``[-M, M]``.

    ``M`` is the Cauchy bound, so the polynomial has opposite signs at the
    two ends.  Returns the root as a float; see :func:`odd_degree_bisection`
    for the iteration record.
    """
    return odd_degree_bisection(f, tol, xtol).root


def odd_degree_bisection(f, tol=DEFAULT_TOL, xtol=0.0):
    if not tol > 0:
        raise DomainError("tol must be positive")
    coeffs = f.rational_coeffs() if isinstance(f, UniPoly) else [Fraction(c) for c in f]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs or (len(coeffs) - 1) % 2 == 0:
        raise DomainError("odd_degree_real_root needs odd degree")
    m = float(cauchy_bound(coeffs))
    fc = [float(c) for c in coeffs]
    return bisect(lambda t: horner(fc, t), -m, m, tol, xtol)


def format_complex(z, precision=12):
    """``a+bi`` with trailing zeros trimmed, e.g. ``2+1i``."""
    def fmt(v):
        text = f"{v:.{precision}f}".rstrip("0").rstrip(".")
        return "0" if text in ("-0", "") else text

    re_, im = fmt(z.real), fmt(z.imag)
    sign = "-" if im.startswith("-") else "+"
    return f"{re_}{sign}{im.lstrip('-')}i"
