"""Permutation value type: algebra laws, cycle machinery, text format."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgroups.perms import ParseError, Perm, format_perm, parse_perm

from oracles import compose as oracle_compose
from oracles import element_order as oracle_order
from oracles import inverse as oracle_inverse

perms7 = st.permutations(range(7)).map(Perm)


@settings(max_examples=100, derandomize=True)
@given(perms7, perms7)
def test_composition_matches_oracle(p, q):
    assert (p * q).images == oracle_compose(p.images, q.images)


@settings(max_examples=100, derandomize=True)
@given(perms7, perms7, perms7)
def test_composition_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@settings(max_examples=100, derandomize=True)
@given(perms7)
def test_inverse_matches_oracle(p):
    assert p.inverse().images == oracle_inverse(p.images)
    assert (p * p.inverse()).is_identity()


@settings(max_examples=100, derandomize=True)
@given(perms7, perms7)
def test_conjugation_transports_images(p, g):
    # a^p = b implies (a^g)^(p^g) = b^g
    conj = p.conjugate(g)
    for a in range(7):
        assert conj(g(a)) == g(p(a))


@settings(max_examples=100, derandomize=True)
@given(perms7, perms7, perms7)
def test_conjugation_is_antihomomorphic_in_order(p, g, h):
    assert p.conjugate(g * h) == p.conjugate(g).conjugate(h)


@settings(max_examples=100, derandomize=True)
@given(perms7)
def test_order_matches_oracle(p):
    if p.is_identity():
        assert p.order() == 1
    else:
        assert p.order() == oracle_order(p.images)


@settings(max_examples=100, derandomize=True)
@given(perms7)
def test_power_consistency(p):
    n = p.order()
    assert (p ** n).is_identity()
    assert p ** -1 == p.inverse()
    assert p ** (n + 1) == p


@settings(max_examples=100, derandomize=True)
@given(perms7)
def test_format_parse_round_trip(p):
    assert parse_perm(format_perm(p), 7) == p


def test_cycle_decomposition_frozen():
    p = Perm((1, 2, 0, 4, 3, 5))
    assert p.cycles() == [(0, 1, 2), (3, 4)]
    assert p.cycle_type() == (1, 2, 3)
    assert p.order() == 6
    assert format_perm(p) == "(1 2 3)(4 5)"
    assert p.min_moved() == 0
    assert p.moved_points() == [0, 1, 2, 3, 4]


def test_identity_formatting():
    e = Perm.identity(5)
    assert format_perm(e) == "()"
    assert parse_perm("()", 5) == e
    assert e.min_moved() is None


def test_parse_accepts_commas_and_whitespace():
    a = parse_perm("(1, 2, 3)(4 5)", 6)
    b = parse_perm("(1 2 3) (4,5)", 6)
    assert a == b == Perm((1, 2, 0, 4, 3, 5))


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse_perm("(1 2) x", 4)
    assert err.value.position == 6
    with pytest.raises(ParseError) as err:
        parse_perm("(1 2", 4)
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse_perm("(1 9)", 4)
    assert err.value.position == 3
    with pytest.raises(ParseError) as err:
        parse_perm("(1 2)(2 3)", 4)
    assert err.value.position == 6
    with pytest.raises(ParseError) as err:
        parse_perm("(1)", 4)
    assert err.value.position == 2
    with pytest.raises(ParseError) as err:
        parse_perm("3", 4)
    assert err.value.position == 0


def test_bad_image_tables_rejected():
    with pytest.raises(ValueError):
        Perm((0, 0, 1))
    with pytest.raises(ValueError):
        Perm((0, 1, 3))
    with pytest.raises(ValueError):
        Perm((1, 0)) * Perm((0, 1, 2))


def test_from_cycles_validation():
    with pytest.raises(ValueError):
        Perm.from_cycles([[0, 1], [1, 2]], 4)
    with pytest.raises(ValueError):
        Perm.from_cycles([[0, 9]], 4)
    assert Perm.from_cycles([], 3).is_identity()
