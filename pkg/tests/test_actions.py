"""Orbits, blocks, kernels, coset actions: checked against exhaustive
partition enumeration and element filtration on small degrees."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgroups.actions import (
    BlockSystem,
    CosetAction,
    InducedAction,
    IndexExceedsCap,
    IntransitiveGroup,
    PrimitiveGroupError,
    action_on_blocks,
    block_stabilizer_restriction,
    block_systems,
    is_primitive,
    is_regular,
    is_semiregular,
    is_transitive,
    is_two_transitive,
    minimal_block_containing,
    minimal_block_systems,
    orbit,
    orbits,
    point_stabilizer,
    system_of_block,
    transitivity_grade,
)
from dgroups.catalog import build
from dgroups.chain import PermGroup
from dgroups.perms import Perm

from oracles import (
    brute_block_systems,
    brute_elements,
    brute_kernel,
    brute_minimal_block_containing,
    brute_orbits,
)

gen_sets6 = st.lists(st.permutations(range(6)).map(Perm), min_size=1, max_size=3)


def sym(n):
    return PermGroup(
        [Perm.from_cycles([[0, 1]], n), Perm.from_cycles([list(range(n))], n)], n
    )


@settings(max_examples=60, derandomize=True, deadline=None)
@given(gen_sets6)
def test_orbits_match_brute(gens):
    group = PermGroup(gens, 6)
    assert orbits(group) == brute_orbits([g.images for g in gens], 6)
    assert is_transitive(group) == (len(orbits(group)) == 1)


@settings(max_examples=40, derandomize=True, deadline=None)
@given(gen_sets6)
def test_block_systems_match_brute(gens):
    group = PermGroup(gens, 6)
    if not is_transitive(group):
        return
    expected = brute_block_systems([g.images for g in gens], 6)
    if not expected:
        assert is_primitive(group)
        return
    got = {frozenset(s.blocks) for s in block_systems(group)}
    assert got == expected


@settings(max_examples=40, derandomize=True, deadline=None)
@given(gen_sets6, st.integers(0, 5), st.integers(0, 5))
def test_minimal_block_matches_brute(gens, a, b):
    group = PermGroup(gens, 6)
    if not is_transitive(group):
        return
    got = minimal_block_containing(group, [a, b])
    if a == b:
        # a single point is its own block
        assert got == (a,)
        return
    want = brute_minimal_block_containing([g.images for g in gens], 6, [a, b])
    assert got == want


def test_orbit_and_stabilizer():
    g = sym(5)
    assert orbit(g, 2) == [0, 1, 2, 3, 4]
    stab = point_stabilizer(g, 0)
    assert stab.order() == 24
    assert all(h.images[0] == 0 for h in stab.generators)
    with pytest.raises(ValueError):
        orbit(g, 7)


def test_transitivity_predicates_frozen():
    s4 = sym(4)
    assert is_transitive(s4) and is_two_transitive(s4)
    assert transitivity_grade(s4) == 4
    a4 = PermGroup(
        [Perm.from_cycles([[0, 1, 2]], 4), Perm.from_cycles([[1, 2, 3]], 4)], 4
    )
    assert transitivity_grade(a4) == 2
    z6 = PermGroup([Perm.from_cycles([list(range(6))], 6)], 6)
    assert transitivity_grade(z6) == 1
    assert is_regular(z6) and is_semiregular(z6)
    assert not is_regular(s4)
    intrans = PermGroup([Perm.from_cycles([[0, 1]], 4)], 4)
    assert transitivity_grade(intrans) == 0


def test_m11_is_four_transitive(corpus_by_key):
    assert transitivity_grade(corpus_by_key["m11()"].group) == 4


def test_semiregular_but_not_regular():
    g = PermGroup([Perm.from_cycles([[0, 1], [2, 3]], 4)], 4)
    assert is_semiregular(g)
    assert not is_regular(g)


def test_block_system_object():
    system = BlockSystem(((0, 1), (2, 3)), 4)
    assert system.num_blocks == 2
    assert system.block_size == 2
    assert system.block_of[3] == 1
    assert not system.is_trivial
    assert system.one_based() == [[1, 2], [3, 4]]


def test_primitive_group_has_no_systems():
    with pytest.raises(PrimitiveGroupError):
        block_systems(sym(4))
    with pytest.raises(PrimitiveGroupError):
        minimal_block_systems(sym(5))
    assert is_primitive(sym(4))


def test_intransitive_rejected():
    g = PermGroup([Perm.from_cycles([[0, 1]], 4)], 4)
    with pytest.raises(IntransitiveGroup):
        block_systems(g)
    with pytest.raises(IntransitiveGroup):
        minimal_block_containing(g, [0, 2])


def test_wreath_blocks_and_kernel(corpus_by_key):
    entry = corpus_by_key["wreath(k=3,n=4)"]
    group = entry.group
    systems = minimal_block_systems(group)
    assert len(systems) == 1
    fibers = systems[0]
    assert fibers.block_size == 3 and fibers.num_blocks == 4
    assert fibers.blocks[0] == (0, 1, 2)

    induced = InducedAction(group, fibers)
    assert induced.kernel.order() == 3 ** 4
    assert induced.image.order() == group.order() // induced.kernel.order()
    elements = brute_elements([g.images for g in group.generators], 12)
    assert len(brute_kernel(elements, fibers.blocks)) == 81

    top = action_on_blocks(group, fibers)
    assert top.image.degree == 4
    assert top.image.order() == 8

    on_block = block_stabilizer_restriction(group, fibers)
    assert on_block.degree == 3
    assert on_block.order() in (3, 6)

    assert system_of_block(group, (0, 1, 2)).blocks == fibers.blocks
    assert minimal_block_containing(group, [0, 1]) == (0, 1, 2)


def test_join_closure_finds_coarser_systems(corpus_by_key):
    group = corpus_by_key["wreath(k=3,n=4)"].group
    all_systems = block_systems(group)
    shapes = sorted((s.num_blocks, s.block_size) for s in all_systems)
    expected = brute_block_systems([g.images for g in group.generators], 12)
    assert len(all_systems) == len(expected)
    assert {frozenset(s.blocks) for s in all_systems} == expected
    assert (4, 3) in shapes and (2, 6) in shapes


def test_coset_action_s4_mod_z3():
    s4 = sym(4)
    sub = PermGroup([Perm.from_cycles([[0, 1, 2]], 4)], 4)
    ca = CosetAction(s4, sub)
    assert ca.degree == 8
    assert ca.is_faithful()
    assert ca.image.order() == 24
    assert is_transitive(ca.image)
    identity_image = ca.image_of(s4.identity())
    assert identity_image.is_identity()
    # the image of a subgroup element fixes the coset of the identity
    assert ca.image_of(sub.generators[0]).images[0] == 0


def test_coset_action_index_cap():
    s4 = sym(4)
    trivial = PermGroup([], 4)
    with pytest.raises(IndexExceedsCap) as err:
        CosetAction(s4, trivial, cap_index=10)
    assert err.value.index == 24


def test_coset_action_requires_subgroup():
    s4 = sym(4)
    not_sub = PermGroup([Perm.from_cycles([[0, 1, 2, 3, 4]], 5)], 5)
    with pytest.raises(Exception):
        CosetAction(s4, not_sub)
