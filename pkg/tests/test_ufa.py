import random

import pytest
from hypothesis import given, strategies as st

from ufalg import (
    INFINITE, BasisNotCertified, DomainError, PreconditionError, binomial, build_root_adjunction,
    build_S1_S2, build_universal_factor_algebra, parse_multipoly, parse_unipoly, third_relation_shortcut,
)
from ufalg.ufa import adjoin_root_of, shortcut_difference

from conftest import rational_poly

CUBIC = "x^3 + a2*x^2 + a1*x + a0"


@pytest.fixture(scope="module")
def cubic_rec():
    return build_universal_factor_algebra(parse_unipoly(CUBIC), 2)


def test_cubic_generators(cubic_rec):
    ring = cubic_rec.algebra.ring
    assert [str(g) for g in cubic_rec.algebra.generators] == [
        "b0*b1 - a2*b0 + a0",
        "b1^2 - a2*b1 - b0 + a1",
    ]
    assert str(cubic_rec.cofactor) == "x + (-b1 + a2)"
    assert cubic_rec.remainder.degree == 1
    assert cubic_rec.cofactor * cubic_rec.divisor + cubic_rec.remainder == parse_unipoly(CUBIC).embed(ring)


def test_cubic_basis_and_rank(cubic_rec):
    a = cubic_rec.algebra
    a.certify()
    assert a.basis_names() == ["1", "b0", "b1"]
    assert a.dimension() == 3 == binomial(3, 2)
    assert a.base_description() == "Q[a0, a1, a2]"


def test_k_zero_is_base_ring():
    rec = build_universal_factor_algebra(parse_unipoly("x^2 - 3"), 0)
    assert rec.algebra.generators == ()
    assert rec.algebra.dimension() == 1


def test_k_equal_n_is_base_ring():
    rec = build_universal_factor_algebra(parse_unipoly("x^2 - 3*x + 1"), 2)
    assert rec.algebra.dimension() == 1
    assert rec.algebra.basis_names() == ["1"]


def test_too_large_k_gives_zero_ring():
    rec = build_universal_factor_algebra(parse_unipoly("x"), 2)
    assert rec.algebra.is_zero_ring() and rec.algebra.dimension() == 0
    sym = build_universal_factor_algebra(parse_unipoly(CUBIC), 4)
    assert sym.algebra.is_zero_ring() and sym.algebra.dimension() == 0


def test_constant_f():
    one = parse_unipoly("1")
    assert build_universal_factor_algebra(one, 0).algebra.dimension() == 1
    assert build_universal_factor_algebra(one, 1).algebra.is_zero_ring()


def test_preconditions():
    with pytest.raises(PreconditionError):
        build_universal_factor_algebra(parse_unipoly("2*x^2 + 1"), 1)
    with pytest.raises(DomainError):
        build_universal_factor_algebra(parse_unipoly("x^2 + 1"), -1)
    with pytest.raises(PreconditionError):
        build_root_adjunction(parse_unipoly("1"))


def test_root_adjunction_examples():
    a = build_root_adjunction(parse_unipoly("x^2 + 1"))
    assert a.dimension() == 2 and a.basis_names() == ["1", "alpha"]
    assert build_root_adjunction(parse_unipoly("x - 7/2")).dimension() == 1
    sym = build_root_adjunction(parse_unipoly(CUBIC))
    assert sym.basis_names() == ["1", "alpha", "alpha^2"]
    assert sym.notes["variable_map"] == {"alpha": "-b0"}


def test_root_and_factor_conventions_agree():
    f = parse_unipoly(CUBIC)
    root = build_root_adjunction(f).generators[0]
    factor = build_universal_factor_algebra(f, 1).algebra.generators[0]
    # the remainder of f by x + b0 is f(-b0), i.e. f(alpha) under alpha = -b0
    ring = factor.ring
    assert root.substitute({"alpha": -ring.var("b0")}, ring) == factor


def test_symbolic_quartic_rank():
    rec = build_universal_factor_algebra(parse_unipoly("x^4 + a3*x^3 + a2*x^2 + a1*x + a0"), 2)
    assert rec.algebra.dimension() == binomial(4, 2)


def test_non_free_presentation_is_rejected():
    from ufalg import PolyRing, PresentedAlgebra, VarTable

    ring = PolyRing(VarTable.from_names(["a0", "b0"]))
    a = PresentedAlgebra(ring, [parse_multipoly("a0*b0 - 1", ring=ring)])
    with pytest.raises(BasisNotCertified):
        a.dimension()


@pytest.mark.parametrize("coeffs,k", [([0, -1, 0, 1], 1), ([0, -1, 0, 1], 2), ([1, 0, 1], 1), ([2, 0, 0, 0, 1], 2)])
def test_s1_s2_examples(coeffs, k):
    f = rational_poly(coeffs)
    n = f.degree
    s1, s2 = build_S1_S2(f, k)
    assert s1.dimension() == s2.dimension() == k * binomial(n, k)
    assert s2.dimension() == (n - k + 1) * binomial(n, k - 1)


def test_s1_s2_domain():
    with pytest.raises(DomainError):
        build_S1_S2(parse_unipoly(CUBIC), 1)
    with pytest.raises(DomainError):
        build_S1_S2(rational_poly([1, 0, 1]), 3)


def test_adjoin_root_needs_monic(cubic_rec):
    with pytest.raises(PreconditionError):
        adjoin_root_of(cubic_rec.algebra, cubic_rec.divisor * rational_poly([2]).embed(cubic_rec.divisor.ring))


def test_shortcut(cubic_rec):
    diff = shortcut_difference(parse_unipoly(CUBIC))
    assert diff.degree == 2 and diff[0].is_zero()
    third = third_relation_shortcut(parse_unipoly(CUBIC))
    ring = third.ring
    assert third == parse_multipoly("a1*b0 - b0^2 - a0*b1", ring=ring)
    assert cubic_rec.algebra.normal_form(third).is_zero()
    gens = set(cubic_rec.algebra.generators)
    assert -diff[2].embed(cubic_rec.algebra.ring) in gens


def test_shortcut_needs_cubic():
    with pytest.raises(DomainError):
        shortcut_difference(parse_unipoly("x^2 + 1"))


@given(st.lists(st.integers(-9, 9), min_size=0, max_size=5))
def test_dimension_matches_binomial(lower):
    f = rational_poly(lower + [1])
    n = f.degree
    for k in range(n + 2):
        assert build_universal_factor_algebra(f, k).algebra.dimension() == binomial(n, k)


def test_dimension_with_a_triple_root():
    rng = random.Random(3)
    for _ in range(10):
        r = rng.randint(-3, 3)
        f = rational_poly([-r, 1]) ** 3
        dims = [build_universal_factor_algebra(f, k).algebra.dimension() for k in range(4)]
        assert INFINITE not in dims and dims == [1, 3, 3, 1]
