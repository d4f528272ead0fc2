"""Orbits, block systems, induced block actions and coset actions.

Block systems are G-invariant partitions into equal-size blocks.  The
minimal block containing a seed set is found with the union-find merging
scheme; every block through a fixed point is then a join of pair-seeded
minimal blocks, which is how the full lattice of systems is enumerated.

Kernels of block actions are extracted without quotient bookkeeping: the
group is rebuilt on an extended domain that appends one synthetic label
per block, the labels are forced to the front of the base, and the
strong generators past the label levels are exactly the kernel.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .chain import PermGroup
from .perms import Perm

__all__ = [
    "IntransitiveGroup",
    "PrimitiveGroupError",
    "InvariantViolation",
    "NotASubgroup",
    "IndexExceedsCap",
    "BlockSystem",
    "InducedAction",
    "CosetAction",
    "orbit",
    "orbits",
    "is_transitive",
    "is_regular",
    "is_semiregular",
    "is_two_transitive",
    "is_primitive",
    "transitivity_grade",
    "point_stabilizer",
    "restrict",
    "minimal_block_containing",
    "system_of_block",
    "minimal_block_systems",
    "block_systems",
    "action_on_blocks",
    "block_stabilizer_restriction",
]


class IntransitiveGroup(ValueError):
    """Raised by operations that only make sense for transitive groups."""


class PrimitiveGroupError(ValueError):
    """Raised when a primitive group is asked for nontrivial blocks."""


class InvariantViolation(ValueError):
    """The given partition is not preserved by the group."""


class NotASubgroup(ValueError):
    """The claimed subgroup has elements outside the ambient group."""


class IndexExceedsCap(RuntimeError):
    def __init__(self, index: int, cap: int):
        super().__init__(f"coset index {index} exceeds cap {cap}")
        self.index = index
        self.cap = cap


# -- orbits and basic predicates -----------------------------------------


def orbits(group: PermGroup) -> list[list[int]]:
    """Orbits as sorted lists, ordered by smallest point."""
    n = group.degree
    seen = bytearray(n)
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = 1
        for x in orb:
            for g in group.generators:
                y = g.images[x]
                if not seen[y]:
                    seen[y] = 1
                    orb.append(y)
        out.append(sorted(orb))
    return out


def orbit(group: PermGroup, point: int) -> list[int]:
    """The orbit of one point, sorted."""
    if not 0 <= point < group.degree:
        raise ValueError(f"point {point} outside degree {group.degree}")
    orb = [point]
    seen = {point}
    for x in orb:
        for g in group.generators:
            y = g.images[x]
            if y not in seen:
                seen.add(y)
                orb.append(y)
    return sorted(orb)


def is_transitive(group: PermGroup) -> bool:
    return len(orbits(group)) == 1


def is_regular(group: PermGroup) -> bool:
    return is_transitive(group) and group.order() == group.degree


def is_semiregular(group: PermGroup) -> bool:
    """Whether every point stabilizer is trivial (orbits all of full size)."""
    order = group.order()
    return all(len(orb) == order for orb in orbits(group))


def point_stabilizer(group: PermGroup, point: int) -> PermGroup:
    """Stabilizer of one point, via a chain with that point forced first."""
    rebased = PermGroup(group.generators, group.degree, base_prefix=(point,))
    return PermGroup(rebased.prefix_fixing_generators(), group.degree)


def is_two_transitive(group: PermGroup) -> bool:
    n = group.degree
    if n < 2 or not is_transitive(group):
        return False
    stab = point_stabilizer(group, 0)
    rest = [orb for orb in orbits(stab) if 0 not in orb]
    return len(rest) == 1 and len(rest[0]) == n - 1


def transitivity_grade(group: PermGroup) -> int:
    """Largest k such that the action is k-transitive (0 if intransitive)."""
    n = group.degree
    if not is_transitive(group):
        return 0
    grade = 1
    while grade < n:
        prefix = tuple(range(grade))
        rebased = PermGroup(group.generators, n, base_prefix=prefix)
        stab = PermGroup(rebased.prefix_fixing_generators(), n)
        if len(orbit(stab, grade)) != n - grade:
            break
        grade += 1
    return grade


def restrict(p: Perm, points: Iterable[int]) -> Perm:
    """Restriction of ``p`` to an invariant point set, renumbered sorted."""
    pts = sorted(points)
    pos = {x: i for i, x in enumerate(pts)}
    try:
        return Perm(pos[p.images[x]] for x in pts)
    except KeyError as exc:
        raise ValueError("point set is not invariant under the permutation") from exc


# -- block systems ---------------------------------------------------------


class BlockSystem:
    """An invariant partition into equal-size blocks, canonically ordered."""

    __slots__ = ("blocks", "degree", "block_of")

    def __init__(self, blocks: Iterable[Iterable[int]], degree: int):
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        if not canon:
            raise ValueError("no blocks")
        size = len(canon[0])
        block_of = [-1] * degree
        count = 0
        for i, blk in enumerate(canon):
            if len(blk) != size:
                raise ValueError("blocks have unequal sizes")
            for x in blk:
                if not 0 <= x < degree or block_of[x] != -1:
                    raise ValueError("blocks do not partition the point set")
                block_of[x] = i
                count += 1
        if count != degree:
            raise ValueError("blocks do not cover the point set")
        self.blocks = canon
        self.degree = degree
        self.block_of = tuple(block_of)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    @property
    def is_trivial(self) -> bool:
        return self.block_size == 1 or self.num_blocks == 1

    def one_based(self) -> list[list[int]]:
        return [[x + 1 for x in blk] for blk in self.blocks]

    def __eq__(self, other) -> bool:
        return isinstance(other, BlockSystem) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"BlockSystem({self.num_blocks} x {self.block_size})"


def _merge_partition(
    gens: Sequence[Perm], degree: int, seeds: Sequence[int]
) -> list[int]:
    """Finest invariant partition with all seeds in one class (rep array).

    Union-find with eager relabelling; whenever two classes merge, the
    absorbed representative is queued and later re-paired with its new
    representative under every generator.
    """
    rep = list(range(degree))
    queue: list[int] = []

    def merge(a: int, b: int) -> None:
        ra, rb = rep[a], rep[b]
        if ra == rb:
            return
        keep, absorb = (ra, rb) if ra < rb else (rb, ra)
        for v in range(degree):
            if rep[v] == absorb:
                rep[v] = keep
        queue.append(absorb)

    base = seeds[0]
    for s in seeds[1:]:
        merge(base, s)
    head = 0
    while head < len(queue):
        gamma = queue[head]
        head += 1
        delta = rep[gamma]
        for g in gens:
            merge(g.images[gamma], g.images[delta])
    return rep


def _classes(rep: Sequence[int]) -> list[list[int]]:
    buckets: dict[int, list[int]] = {}
    for v, r in enumerate(rep):
        buckets.setdefault(r, []).append(v)
    return [buckets[r] for r in sorted(buckets)]


def _require_transitive(group: PermGroup) -> None:
    if not is_transitive(group):
        raise IntransitiveGroup(
            f"group has {len(orbits(group))} orbits; need a transitive action"
        )


def minimal_block_containing(group: PermGroup, seeds: Sequence[int]) -> tuple[int, ...]:
    """Smallest block containing all seeds; the whole domain if none is proper."""
    _require_transitive(group)
    if len(seeds) < 2:
        raise ValueError("need at least two seed points")
    rep = _merge_partition(group.generators, group.degree, seeds)
    classes = _classes(rep)
    return tuple(next(c for c in classes if seeds[0] in c))


def system_of_block(group: PermGroup, block: Sequence[int]) -> BlockSystem:
    """The block system generated by translating one block around."""
    _require_transitive(group)
    rep = _merge_partition(group.generators, group.degree, tuple(block))
    return BlockSystem(_classes(rep), group.degree)


def _pair_blocks(group: PermGroup) -> dict[tuple[int, ...], BlockSystem]:
    """Nontrivial minimal blocks through 0, keyed by block, with systems."""
    n = group.degree
    found: dict[tuple[int, ...], BlockSystem] = {}
    for p in range(1, n):
        rep = _merge_partition(group.generators, n, (0, p))
        classes = _classes(rep)
        block = tuple(next(c for c in classes if 0 in c))
        if len(block) == n:
            continue
        if block not in found:
            found[block] = BlockSystem(classes, n)
    return found


def is_primitive(group: PermGroup) -> bool:
    if not is_transitive(group):
        return False
    if group.degree == 1:
        return True
    return not _pair_blocks(group)


def minimal_block_systems(group: PermGroup) -> list[BlockSystem]:
    """All minimal (finest) nontrivial systems, smallest blocks first."""
    _require_transitive(group)
    pair = _pair_blocks(group)
    if not pair:
        raise PrimitiveGroupError(
            f"group of degree {group.degree} is primitive: no nontrivial blocks"
        )
    keys = list(pair)
    minimal = [
        b
        for b in keys
        if not any(set(c) < set(b) for c in keys if c != b)
    ]
    systems = [pair[b] for b in minimal]
    systems.sort(key=lambda s: (s.block_size, s.blocks))
    for system in systems:
        if not is_primitive(block_stabilizer_restriction(group, system)):
            raise RuntimeError(
                "internal invariant broken: minimal system with imprimitive "
                "block action"
            )
    return systems


def block_systems(group: PermGroup) -> list[BlockSystem]:
    """Every nontrivial block system, via join closure of pair blocks."""
    _require_transitive(group)
    pair = _pair_blocks(group)
    if not pair:
        raise PrimitiveGroupError(
            f"group of degree {group.degree} is primitive: no nontrivial blocks"
        )
    n = group.degree
    known: dict[tuple[int, ...], BlockSystem] = dict(pair)
    blocks = list(known)
    i = 0
    while i < len(blocks):
        for j in range(i):
            a, b = blocks[i], blocks[j]
            if set(a) <= set(b) or set(b) <= set(a):
                continue
            rep = _merge_partition(group.generators, n, tuple(sorted(set(a) | set(b))))
            classes = _classes(rep)
            joined = tuple(next(c for c in classes if 0 in c))
            if len(joined) < n and joined not in known:
                known[joined] = BlockSystem(classes, n)
                blocks.append(joined)
        i += 1
    systems = sorted(known.values(), key=lambda s: (s.block_size, s.blocks))
    return systems


# -- induced actions -------------------------------------------------------


def _extended_generators(group: PermGroup, system: BlockSystem) -> list[Perm]:
    """Generators on points + one synthetic label per block (labels last)."""
    n = group.degree
    if system.degree != n:
        raise InvariantViolation("block system degree does not match group")
    ext = []
    for g in group.generators:
        imgs = list(g.images) + [0] * system.num_blocks
        for i, blk in enumerate(system.blocks):
            target = system.block_of[g.images[blk[0]]]
            for x in blk[1:]:
                if system.block_of[g.images[x]] != target:
                    raise InvariantViolation(
                        f"generator {g} does not preserve the partition"
                    )
            imgs[n + i] = n + target
        ext.append(Perm(imgs))
    return ext


class InducedAction:
    """A group's action on the blocks of one of its systems.

    ``image`` acts on block indices; ``kernel`` is the subgroup acting
    trivially on blocks, still on the original points.
    """

    def __init__(self, group: PermGroup, system: BlockSystem):
        n, m = group.degree, system.num_blocks
        ext_gens = _extended_generators(group, system)
        extended = PermGroup(
            ext_gens, n + m, base_prefix=tuple(range(n, n + m))
        )
        self.group = group
        self.system = system
        self.image = PermGroup(
            [Perm(tuple(e.images[n + i] - n for i in range(m))) for e in ext_gens],
            m,
        )
        self.kernel = PermGroup(
            [restrict(h, range(n)) for h in extended.prefix_fixing_generators()],
            n,
        )

    def image_of(self, g: Perm) -> Perm:
        """Block permutation induced by ``g`` (which must respect the blocks)."""
        system = self.system
        imgs = []
        for blk in system.blocks:
            target = system.block_of[g.images[blk[0]]]
            for x in blk[1:]:
                if system.block_of[g.images[x]] != target:
                    raise InvariantViolation(
                        "permutation does not preserve the partition"
                    )
            imgs.append(target)
        return Perm(imgs)


def action_on_blocks(group: PermGroup, system: BlockSystem) -> InducedAction:
    return InducedAction(group, system)


def block_stabilizer_restriction(
    group: PermGroup, system: BlockSystem, block_index: int = 0
) -> PermGroup:
    """Setwise stabilizer of one block, restricted to that block's points."""
    n = group.degree
    ext_gens = _extended_generators(group, system)
    extended = PermGroup(
        ext_gens, n + system.num_blocks, base_prefix=(n + block_index,)
    )
    block = system.blocks[block_index]
    return PermGroup(
        [restrict(h, block) for h in extended.prefix_fixing_generators()],
        len(block),
    )


# -- coset actions ----------------------------------------------------------


class CosetAction:
    """Action of a group on the right cosets of a subgroup.

    Cosets are numbered in breadth-first discovery order starting from
    the subgroup itself (index 0), applying generators in their stored
    order, so the numbering is reproducible.
    """

    def __init__(self, group: PermGroup, subgroup: PermGroup, cap_index: int = 10_000):
        if subgroup.degree != group.degree:
            raise NotASubgroup("subgroup degree differs from group degree")
        if not subgroup.is_subgroup_of(group):
            raise NotASubgroup("generators of the subgroup fall outside the group")
        index = group.order() // subgroup.order()
        if index > cap_index:
            raise IndexExceedsCap(index, cap_index)
        self.group = group
        self.subgroup = subgroup
        reps = [subgroup.coset_representative(group.identity())]
        lookup = {reps[0]: 0}
        i = 0
        while i < len(reps):
            for g in group.generators:
                r = subgroup.coset_representative(reps[i] * g)
                if r not in lookup:
                    lookup[r] = len(reps)
                    reps.append(r)
            i += 1
        self.representatives = reps
        self._lookup = lookup
        self.degree = len(reps)
        self.image = PermGroup(
            [self.image_of(g) for g in group.generators], self.degree
        )

    def image_of(self, g: Perm) -> Perm:
        lk = self._lookup
        canon = self.subgroup.coset_representative
        return Perm(lk[canon(rep * g)] for rep in self.representatives)

    def is_faithful(self) -> bool:
        return self.image.order() == self.group.order()
