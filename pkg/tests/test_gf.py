import random

import pytest

from trigal import gf
from trigal.errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    ReducibleModulus,
)


def test_defaults_give_c_squared_equals_c_plus_one():
    for p in (2, 3):
        field = gf.field_make(p, 2)
        c = field.gen()
        assert c * c == c + field.one()


def test_gf4_multiplication():
    field = gf.field_make(2, 2)
    c = field.gen()
    assert c * c == gf.parse_element(field, "c+1")


def test_gf9_additive_inverse():
    field = gf.field_make(3, 2)
    c = field.gen()
    assert (c + (-c)).code == 0


def test_fermat_little_theorem_gf5():
    field = gf.field_make(5)
    assert (field.element(2) ** 4) == field.one()


def test_construction_errors():
    with pytest.raises(NotPrime):
        gf.field_make(6, 1)
    with pytest.raises(ReducibleModulus):
        gf.field_make(2, 2, (0, 0, 1))  # w^2 is reducible
    with pytest.raises(DegreeMismatch):
        gf.field_make(2, 2, (1, 1, 1, 1))
    with pytest.raises(DegreeMismatch):
        gf.field_make(2, 0)


def test_supplied_modulus_verified():
    # w^2 + 1 = (w+1)^2 over GF(2)
    with pytest.raises(ReducibleModulus):
        gf.field_make(2, 2, (1, 0, 1))
    # but is irreducible over GF(3)
    field = gf.field_make(3, 2, (1, 0, 1))
    assert field.q == 9


def test_cross_field_arithmetic_rejected():
    a = gf.field_make(2, 2).one()
    b = gf.field_make(2, 3).one()
    with pytest.raises(FieldMismatch):
        a + b
    with pytest.raises(FieldMismatch):
        a * b


def test_division_by_zero():
    field = gf.field_make(5)
    with pytest.raises(DivisionByZero):
        field.one() / field.zero()
    with pytest.raises(DivisionByZero):
        field.zero().inverse()


def test_frobenius_conjugate_in_gf4():
    field = gf.field_make(2, 2)
    c = field.gen()
    assert gf.frobenius(c) == c + field.one()


def test_frobenius_order_k_in_gf9():
    field = gf.field_make(3, 2)
    for x in gf.field_elements(field):
        assert gf.frobenius(gf.frobenius(x)) == x


def test_enumeration_gf2():
    assert [e.code for e in gf.field_elements(gf.field_make(2))] == [0, 1]


def test_enumeration_is_lexicographic_and_complete():
    field = gf.field_make(3, 2)
    elems = gf.field_elements(field)
    assert len(elems) == 9
    assert [e.coeffs for e in elems] == sorted(e.coeffs for e in elems)
    assert len({e.code for e in elems}) == 9


@pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (3, 2), (5, 1), (2, 4), (3, 4)])
def test_multiplicative_order_divides_group_order(p, k):
    field = gf.field_make(p, k)
    q = field.q
    for x in gf.field_elements(field):
        assert x ** q == x
        if x.code != 0:
            assert x ** (q - 1) == field.one()


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (2, 4), (3, 4), (5, 2)])
def test_frobenius_is_an_automorphism(p, k):
    field = gf.field_make(p, k)
    elems = gf.field_elements(field)
    assert field.q <= 81
    for x in elems:
        for y in elems:
            assert gf.frobenius(x * y) == gf.frobenius(x) * gf.frobenius(y)
            assert gf.frobenius(x + y) == gf.frobenius(x) + gf.frobenius(y)


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 2), (7, 1), (11, 1)])
def test_field_axioms_on_seeded_triples(p, k):
    field = gf.field_make(p, k)
    rng = random.Random(1234)
    for _ in range(300):
        x, y, z = (field.element(rng.randrange(field.q)) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x
        if y.code != 0:
            assert (x / y) * y == x


def test_field_arith_dispatch():
    field = gf.field_make(7)
    three, five = field.element(3), field.element(5)
    assert gf.field_arith(three, five, "add").code == 1
    assert gf.field_arith(three, five, "sub").code == 5
    assert gf.field_arith(three, five, "mul").code == 1
    assert gf.field_arith(three, five, "div") == three * five.inverse()


def test_parse_field_forms():
    assert gf.parse_field("5").q == 5
    assert gf.parse_field("2^4").q == 16
    custom = gf.parse_field("3^2:1,0,1")
    assert custom.modulus == (1, 0, 1)
    with pytest.raises(ValueError):
        gf.parse_field("nonsense")


def test_parse_element_expressions():
    field = gf.field_make(3, 2)
    assert gf.parse_element(field, "c+1") == field.gen() + field.one()
    assert gf.parse_element(field, "2c+2") == (field.gen() + field.one()).__mul__(
        field.element(2)
    )
    assert gf.parse_element(field, "-1") == -field.one()
    prime = gf.field_make(5)
    assert gf.parse_element(prime, "7").code == 2
    with pytest.raises(ValueError):
        gf.parse_element(prime, "c")  # no generator in a prime field


def test_spec_string_roundtrip():
    for text in ("5", "2^4", "3^2:1,0,1"):
        field = gf.parse_field(text)
        assert gf.parse_field(field.spec_string()) == field


def test_interning():
    assert gf.field_make(2, 2) is gf.field_make(2, 2)
    assert gf.field_make(2, 2) != gf.field_make(3, 2)
