"""Stabilizer chains: order, membership, subgroup machinery, splitting.

Orders and memberships are checked against breadth-first closure; the
named groups (dihedral, quaternion, symmetric) pin concrete values.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgroups.chain import (
    NotCentral,
    NotPrimeOrder,
    OrderExceedsCap,
    PermGroup,
    StabilizerChain,
)
from dgroups.perms import Perm

from oracles import (
    brute_center,
    brute_centralizer,
    brute_elements,
    brute_splits_over_central,
)


def sym(n):
    gens = [Perm.from_cycles([[0, 1]], n)]
    if n > 2:
        gens.append(Perm.from_cycles([[i for i in range(n)]], n))
    return PermGroup(gens, n)


def dihedral(n):
    """Dihedral group of order 2n on n points."""
    rot = Perm.from_cycles([list(range(n))], n)
    flip = Perm([(n - i) % n for i in range(n)])
    return PermGroup([rot, flip], n)


def quaternion8():
    """Q8 acting regularly on its 8 elements (1, i, -1, -i, j, k, -j, -k)."""
    i = Perm((1, 2, 3, 0, 5, 6, 7, 4))
    j = Perm((4, 7, 6, 5, 2, 1, 0, 3))
    return PermGroup([i, j], 8)


gen_sets = st.lists(st.permutations(range(6)).map(Perm), min_size=1, max_size=3)


@settings(max_examples=60, derandomize=True, deadline=None)
@given(gen_sets)
def test_order_matches_brute_closure(gens):
    group = PermGroup(gens, 6)
    brute = brute_elements([g.images for g in gens], 6)
    assert group.order() == len(brute)
    listed = list(group.elements())
    assert len(listed) == len(set(listed)) == group.order()
    assert set(p.images for p in listed) == brute


@settings(max_examples=40, derandomize=True, deadline=None)
@given(gen_sets, st.permutations(range(6)).map(Perm))
def test_membership_matches_brute_closure(gens, candidate):
    group = PermGroup(gens, 6)
    brute = brute_elements([g.images for g in gens], 6)
    assert (candidate in group) == (candidate.images in brute)


def test_s5_membership_exhaustive():
    from itertools import permutations

    g = sym(5)
    assert g.order() == 120
    assert all(Perm(imgs) in g for imgs in permutations(range(5)))


def test_a5_membership_counts_even_perms():
    from itertools import permutations

    a5 = PermGroup(
        [Perm.from_cycles([[0, 1, 2]], 5), Perm.from_cycles([[0, 1, 2, 3, 4]], 5)],
        5,
    )
    assert a5.order() == 60
    inside = sum(Perm(imgs) in a5 for imgs in permutations(range(5)))
    assert inside == 60


def test_dihedral16_has_nine_involutions():
    d16 = dihedral(8)
    assert d16.order() == 16
    involutions = [g for g in d16.elements() if g.order() == 2]
    assert len(involutions) == 9
    brute = brute_elements([g.images for g in d16.generators], 8)
    assert sum(1 for e in brute if e != tuple(range(8))
               and all(e[e[x]] == x for x in range(8))) == 9


def test_base_prefix_forces_leading_points():
    g = PermGroup(sym(4).generators, 4, base_prefix=(0, 1))
    assert g.base()[:2] == [0, 1]
    stab_gens = g.prefix_fixing_generators()
    stab = PermGroup(stab_gens, 4)
    assert stab.order() == 2
    assert all(h.images[0] == 0 and h.images[1] == 1 for h in stab_gens)


def test_coset_representative_is_coset_invariant():
    g = sym(4)
    stab = PermGroup(
        [h for h in g.elements() if h.images[0] == 0], 4, base_prefix=(0,)
    )
    outer = Perm.from_cycles([[0, 1, 2, 3]], 4)
    reps = {stab.coset_representative(h * outer) for h in stab.elements()}
    assert len(reps) == 1


def test_elements_cap():
    g = sym(5)
    with pytest.raises(OrderExceedsCap) as err:
        list(g.elements(cap=100))
    assert err.value.order == 120
    assert err.value.cap == 100


def test_sift_strips_members():
    g = quaternion8()
    member = g.generators[0] * g.generators[1]
    assert g.sift(member).is_identity()
    assert not g.sift(Perm.from_cycles([[0, 1]], 8)).is_identity()


def test_normal_closure_frozen():
    s4 = sym(4)
    assert s4.normal_closure([Perm.from_cycles([[0, 1]], 4)]).order() == 24
    assert s4.normal_closure(
        [Perm.from_cycles([[0, 1], [2, 3]], 4)]
    ).order() == 4
    a4 = PermGroup(
        [Perm.from_cycles([[0, 1, 2]], 4), Perm.from_cycles([[1, 2, 3]], 4)], 4
    )
    assert a4.normal_closure([Perm.from_cycles([[0, 1, 2]], 4)]).order() == 12


def test_derived_series_of_s4():
    orders = [g.order() for g in sym(4).derived_series()]
    assert orders == [24, 12, 4, 1]


def test_subgroup_and_normality_relations():
    s4 = sym(4)
    v4 = PermGroup(
        [Perm.from_cycles([[0, 1], [2, 3]], 4),
         Perm.from_cycles([[0, 2], [1, 3]], 4)],
        4,
    )
    assert v4.is_subgroup_of(s4)
    assert v4.is_normal_in(s4)
    z2 = PermGroup([Perm.from_cycles([[0, 1]], 4)], 4)
    assert z2.is_subgroup_of(s4)
    assert not z2.is_normal_in(s4)
    assert v4.same_group_as(
        PermGroup([Perm.from_cycles([[0, 2], [1, 3]], 4),
                   Perm.from_cycles([[0, 3], [1, 2]], 4)], 4)
    )


def test_center_frozen():
    assert sym(4).center().is_trivial()
    assert dihedral(4).center().order() == 2
    q8 = quaternion8()
    z = q8.center()
    assert z.order() == 2
    minus_one = Perm((2, 3, 0, 1, 6, 7, 4, 5))
    assert minus_one in z


@settings(max_examples=30, derandomize=True, deadline=None)
@given(gen_sets, st.permutations(range(6)).map(Perm))
def test_centralizer_matches_brute(gens, target):
    group = PermGroup(gens, 6)
    cent = group.centralizer(target)
    elements = brute_elements([g.images for g in gens], 6)
    expected = brute_centralizer(elements, [target.images])
    assert cent.order() == len(expected)
    assert all(c.images in expected for c in cent.generators)


def test_centralizer_of_subgroup_is_brute_center():
    d10 = dihedral(5)
    cent = d10.centralizer(d10)
    brute = brute_center(brute_elements([g.images for g in d10.generators], 5))
    assert cent.order() == len(brute) == 1


def test_quaternion_group_does_not_split_over_center():
    q8 = quaternion8()
    minus_one = Perm((2, 3, 0, 1, 6, 7, 4, 5))
    assert q8.splits_over_central_prime(minus_one) is False
    elements = brute_elements([g.images for g in q8.generators], 8)
    gens = [g.images for g in q8.generators]
    assert brute_splits_over_central(elements, gens, minus_one.images, 8) is False


def test_direct_factor_splits():
    g = PermGroup(
        [Perm.from_cycles([[0, 1]], 6), Perm.from_cycles([[2, 3, 4, 5]], 6)], 6
    )
    swap = Perm.from_cycles([[0, 1]], 6)
    square = Perm.from_cycles([[2, 4], [3, 5]], 6)
    assert g.splits_over_central_prime(swap) is True
    assert g.splits_over_central_prime(square) is False
    elements = brute_elements([x.images for x in g.generators], 6)
    gens = [x.images for x in g.generators]
    assert brute_splits_over_central(elements, gens, swap.images, 6) is True
    assert brute_splits_over_central(elements, gens, square.images, 6) is False


def test_splits_input_validation():
    s4 = sym(4)
    with pytest.raises(NotCentral):
        s4.splits_over_central_prime(Perm.from_cycles([[0, 1]], 4))
    g = PermGroup([Perm.from_cycles([[0, 1, 2, 3]], 4)], 4)
    with pytest.raises(NotPrimeOrder):
        g.splits_over_central_prime(Perm.from_cycles([[0, 1, 2, 3]], 4))
    square = Perm.from_cycles([[0, 2], [1, 3]], 4)
    with pytest.raises(NotPrimeOrder):
        g.splits_over_central_prime(square, p=3)
    with pytest.raises(ValueError):
        g.splits_over_central_prime(Perm.from_cycles([[0, 1]], 4))


def test_incremental_chain_insert():
    chain = StabilizerChain(5)
    assert chain.order() == 1
    grew = chain.insert(Perm.from_cycles([[0, 1]], 5))
    assert grew and chain.order() == 2
    assert not chain.insert(Perm.from_cycles([[0, 1]], 5))
    chain.insert(Perm.from_cycles([[0, 1, 2, 3, 4]], 5))
    assert chain.order() == 120
