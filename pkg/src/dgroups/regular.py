"""Search for regular cyclic and regular dihedral subgroups.

A transitive group of degree n can contain a cyclic subgroup acting
regularly (witnessed by a single n-cycle), a dihedral one (witnessed by
a rotation with two cycles of length n/2 plus an inverting involution
that swaps the rotation's orbits), both, or neither.  The searches scan
the full element list in chain-enumeration order, so results are
deterministic; a cap on the group order keeps the scan honest about
what it is willing to enumerate.

For degree 4 the rotation has order 2 and the witness subgroup is the
Klein four-group, which is counted as dihedral here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import IntransitiveGroup, is_transitive
from .chain import PermGroup
from .perms import Perm

__all__ = [
    "OddDegree",
    "RegularWitness",
    "GroupClass",
    "find_regular_cyclic",
    "find_regular_dihedral",
    "verify_witness",
    "group_class",
]


class OddDegree(ValueError):
    """Dihedral regularity needs an even degree."""


@dataclass(frozen=True)
class RegularWitness:
    """Generators certifying a regular cyclic or dihedral subgroup.

    ``rotation`` is the n-cycle for the cyclic kind, or the (n/2, n/2)
    element for the dihedral kind, where ``reflection`` is the inverting
    involution.  ``subgroup_order`` always equals the degree.
    """

    kind: str
    rotation: Perm
    reflection: Perm | None
    subgroup_order: int

    def subgroup(self) -> PermGroup:
        gens = [self.rotation]
        if self.reflection is not None:
            gens.append(self.reflection)
        return PermGroup(gens, self.rotation.degree)


@dataclass(frozen=True)
class GroupClass:
    verdict: str
    cyclic: RegularWitness | None
    dihedral: RegularWitness | None


def _require_transitive(group: PermGroup) -> None:
    if not is_transitive(group):
        raise IntransitiveGroup("regular subgroup search needs a transitive group")


def find_regular_cyclic(group: PermGroup, cap_order: int = 10**6) -> RegularWitness | None:
    """First full cycle in enumeration order, or None."""
    _require_transitive(group)
    n = group.degree
    if n == 1:
        return RegularWitness("cyclic", group.identity(), None, 1)
    for g in group.elements(cap_order):
        if g.cycle_type() == (n,):
            return RegularWitness("cyclic", g, None, n)
    return None


def find_regular_dihedral(group: PermGroup, cap_order: int = 10**6) -> RegularWitness | None:
    """First rotation/reflection pair in enumeration order, or None.

    The rotation candidate must have two cycles of length n/2; the
    reflection candidate must be an involution sending the rotation to
    its inverse and crossing between the rotation's two orbits.  Those
    two conditions force the generated subgroup to be regular of order
    n, so no extra order or transitivity check is needed here.
    """
    _require_transitive(group)
    n = group.degree
    if n % 2:
        raise OddDegree(f"degree {n} is odd; no regular dihedral subgroup exists")
    if n < 4:
        return None
    m = n // 2
    members = list(group.elements(cap_order))
    involutions = [g for g in members if g.order() == 2]
    target = (m, m)
    for a in members:
        if a.cycle_type() != target:
            continue
        orbit_of_zero = set()
        x = 0
        while x not in orbit_of_zero:
            orbit_of_zero.add(x)
            x = a.images[x]
        a_inv = a.inverse()
        for z in involutions:
            if z.images[0] in orbit_of_zero:
                continue
            if a.conjugate(z) == a_inv:
                return RegularWitness("dihedral", a, z, n)
    return None


def verify_witness(group: PermGroup, witness: RegularWitness) -> tuple[bool, list[str]]:
    """Re-derive every claimed property; returns (ok, problems)."""
    problems: list[str] = []
    n = group.degree
    a = witness.rotation
    if a.degree != n:
        return False, [f"rotation degree {a.degree} != group degree {n}"]
    if a not in group:
        problems.append("rotation is not in the group")
    if witness.subgroup_order != n:
        problems.append(f"subgroup order {witness.subgroup_order} != degree {n}")
    if witness.kind == "cyclic":
        if witness.reflection is not None:
            problems.append("cyclic witness carries a reflection")
        if n == 1:
            if not a.is_identity():
                problems.append("degree-1 witness must be the identity")
        elif a.cycle_type() != (n,):
            problems.append("rotation is not a full cycle")
    elif witness.kind == "dihedral":
        z = witness.reflection
        if n % 2 or n < 4:
            problems.append(f"degree {n} admits no regular dihedral subgroup")
        elif a.cycle_type() != (n // 2, n // 2):
            problems.append("rotation is not semiregular with 2 orbits")
        if z is None:
            problems.append("dihedral witness lacks a reflection")
        else:
            if z.degree != n or z not in group:
                problems.append("reflection is not in the group")
            if z.order() != 2:
                problems.append("reflection is not an involution")
            elif not problems and a.conjugate(z) != a.inverse():
                problems.append("inversion fails")
            if not problems:
                sub = witness.subgroup()
                if sub.order() != n:
                    problems.append(f"witness subgroup has order {sub.order()}, not {n}")
                elif not is_transitive(sub):
                    problems.append("witness subgroup is not transitive")
    else:
        problems.append(f"unknown witness kind {witness.kind!r}")
    return not problems, problems


def group_class(group: PermGroup, cap_order: int = 10**6) -> GroupClass:
    """Classify as c-group, d-group, both or neither, with witnesses."""
    _require_transitive(group)
    cyclic = find_regular_cyclic(group, cap_order)
    dihedral = None
    if group.degree % 2 == 0:
        dihedral = find_regular_dihedral(group, cap_order)
    if cyclic and dihedral:
        verdict = "both"
    elif cyclic:
        verdict = "c-group"
    elif dihedral:
        verdict = "d-group"
    else:
        verdict = "neither"
    return GroupClass(verdict, cyclic, dihedral)
