"""Field arithmetic checks for the prime and binary field backends."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgroups.gf import BINARY_MODULI, Field, UnsupportedOrder, is_prime

fields = st.sampled_from([Field(q) for q in (2, 5, 7, 8, 11, 16, 64)])


@st.composite
def field_and_elements(draw, count):
    field = draw(fields)
    xs = [draw(st.integers(0, field.q - 1)) for _ in range(count)]
    return (field, *xs)


@settings(max_examples=200, derandomize=True)
@given(field_and_elements(3))
def test_ring_axioms(data):
    f, a, b, c = data
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, b) == f.mul(b, a)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, 0) == a
    assert f.mul(a, 1) == a
    assert f.add(a, f.neg(a)) == 0
    assert f.sub(a, b) == f.add(a, f.neg(b))


@settings(max_examples=200, derandomize=True)
@given(field_and_elements(2))
def test_multiplicative_inverses(data):
    f, a, b = data
    if a != 0:
        assert f.mul(a, f.inv(a)) == 1
        assert f.div(f.mul(a, b), a) == b
        assert f.pow(a, f.q - 1) == 1  # Lagrange in the unit group
        assert f.element_order(a) != 0
        assert (f.q - 1) % f.element_order(a) == 0
    else:
        with pytest.raises(ZeroDivisionError):
            f.inv(a)


@settings(max_examples=100, derandomize=True)
@given(field_and_elements(1), st.integers(-6, 6))
def test_pow_matches_repeated_multiplication(data, e):
    f, a = data
    if a == 0 and e < 0:
        return
    acc = 1
    for _ in range(abs(e)):
        acc = f.mul(acc, a)
    if e < 0:
        if acc == 0:
            return
        acc = f.inv(acc)
    assert f.pow(a, e) == acc


def test_prime_field_pins():
    f7 = Field(7)
    assert f7.primitive_element() == 3
    assert f7.element_order(3) == 6
    assert f7.element_order(2) == 3
    assert f7.neg(3) == 4
    assert list(f7.elements()) == list(range(7))


def test_binary_field_pins():
    f64 = Field(64)
    assert f64.char == 2
    assert BINARY_MODULI[6] == 0b1000011  # x^6 + x + 1
    assert f64.element_order(2) == 63  # x generates the unit group
    assert f64.mul(0b100000, 0b10) == 0b11  # x^6 reduces to x + 1
    assert f64.add(a := 0b101010, a) == 0
    assert f64.neg(5) == 5
    f8 = Field(8)
    assert f8.element_order(2) == 7


def test_zero_has_no_order():
    with pytest.raises(ValueError):
        Field(7).element_order(0)


def test_unsupported_orders():
    for q in (1, 6, 9, 12, 25, 512):
        with pytest.raises(UnsupportedOrder):
            Field(q)


def test_is_prime_small_values():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
