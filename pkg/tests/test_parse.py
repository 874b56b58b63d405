import random

import pytest
from hypothesis import given

from ufalg import MultiPoly, ParseError, PolyRing, UniPoly, VarTable, parse_multipoly, parse_poly, parse_unipoly
from ufalg.parse import auto_table

from conftest import SYM_RING, multipolys, random_unipoly


@pytest.mark.parametrize("src,text", [
    ("x^3 + a2*x^2 + a1*x + a0", "x^3 + a2*x^2 + a1*x + a0"),
    ("(x + 1)^2", "x^2 + 2*x + 1"),
    ("x*(x - b0) - -3", "x^2 - b0*x + 3"),
    ("x^2/2 - 1/3", "1/2*x^2 - 1/3"),
    ("0", "0"),
])
def test_examples(src, text):
    assert str(parse_unipoly(src)) == text


@pytest.mark.parametrize("src,offset,fragment", [
    ("x^^2", 2, "exponent"),
    ("x^-1", 2, "negative exponent"),
    ("3*z", 2, "unknown variable"),
    ("(x+1", 4, "expected ')'"),
    ("x+", 2, "end of input"),
    ("2/0", 2, "nonzero"),
    ("2 x", 2, "unexpected"),
])
def test_errors_report_offsets(src, offset, fragment):
    with pytest.raises(ParseError) as info:
        parse_unipoly(src)
    assert info.value.offset == offset
    assert fragment in str(info.value)
    assert str(info.value).endswith(f"at offset {offset}")


def test_declared_table():
    table = VarTable.from_names(["a1", "b0", "b1"])
    p = parse_multipoly("b0^2 - a1*b0", table=table)
    assert p.ring.table.names == ["a1", "b0", "b1"]
    with pytest.raises(ParseError):
        parse_multipoly("c0", table=VarTable.from_names(["a1"]))


def test_auto_table_is_canonical():
    assert auto_table(["b1*a2 + alpha + b0 + a10 + a9"]).names == ["a2", "a9", "a10", "b0", "b1", "alpha"]


def test_parse_poly_dispatch():
    assert isinstance(parse_poly("x^2 + b0"), UniPoly)
    assert isinstance(parse_poly("b0 + 1"), MultiPoly)


def test_unipoly_round_trip():
    rng = random.Random(9)
    for _ in range(200):
        f = random_unipoly(rng, SYM_RING, rng.randint(0, 4), monic=rng.random() < 0.5)
        assert parse_unipoly(str(f), ring=SYM_RING) == f


@given(multipolys())
def test_multipoly_round_trip(p):
    assert parse_multipoly(str(p), ring=SYM_RING) == p


def test_rings_with_order():
    ring = PolyRing(VarTable.from_names(["a0", "b0"]), "lex")
    p = parse_multipoly("a0^3 + b0", ring=ring)
    assert p.leading_monomial() == (0, 1)
