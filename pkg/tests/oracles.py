"""Brute-force oracles, independent of the library's algorithms.

Everything here works on image tuples and exhaustive search: breadth
first closure instead of stabilizer chains, restricted-growth partition
enumeration instead of the union-find block algorithm, element
filtration instead of chain-based subgroup machinery.  Slow on purpose;
only run on degrees up to about 8.
"""

from __future__ import annotations

from itertools import combinations


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Apply p first, then q, matching the library's convention."""
    return tuple(q[p[i]] for i in range(len(p)))


def inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


def brute_elements(gens: list[tuple[int, ...]], degree: int) -> set[tuple[int, ...]]:
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                prod = compose(e, g)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return seen


def brute_order(gens: list[tuple[int, ...]], degree: int) -> int:
    return len(brute_elements(gens, degree))


def element_order(p: tuple[int, ...]) -> int:
    identity = tuple(range(len(p)))
    power, n = p, 1
    while power != identity:
        power = compose(power, p)
        n += 1
    return n


def brute_orbits(gens: list[tuple[int, ...]], degree: int) -> list[list[int]]:
    seen = set()
    out = []
    for start in range(degree):
        if start in seen:
            continue
        orb = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    if g[x] not in orb:
                        orb.add(g[x])
                        nxt.append(g[x])
            frontier = nxt
        seen |= orb
        out.append(sorted(orb))
    return out


def is_transitive(gens: list[tuple[int, ...]], degree: int) -> bool:
    return len(brute_orbits(gens, degree)) == 1


def _partitions(degree: int):
    """All set partitions of range(degree), as block-index vectors."""
    vec = [0] * degree

    def rec(i: int, maxi: int):
        if i == degree:
            yield tuple(vec)
            return
        for b in range(maxi + 2):
            vec[i] = b
            yield from rec(i + 1, max(maxi, b))

    yield from rec(1, 0)


def brute_invariant_partitions(
    gens: list[tuple[int, ...]], degree: int
) -> list[tuple[tuple[int, ...], ...]]:
    """Every nontrivial partition each generator maps blocks to blocks."""
    out = []
    for vec in _partitions(degree):
        nblocks = max(vec) + 1
        if nblocks in (1, degree):
            continue
        blocks: list[list[int]] = [[] for _ in range(nblocks)]
        for x, b in enumerate(vec):
            blocks[b].append(x)
        ok = True
        for g in gens:
            for block in blocks:
                images = {vec[g[x]] for x in block}
                if len(images) != 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(tuple(b) for b in blocks))
    return out


def brute_block_systems(gens, degree) -> set[frozenset[tuple[int, ...]]]:
    """Invariant partitions with equal block sizes, as sets of blocks."""
    out = set()
    for blocks in brute_invariant_partitions(gens, degree):
        sizes = {len(b) for b in blocks}
        if len(sizes) == 1:
            out.add(frozenset(blocks))
    return out


def brute_minimal_block_containing(gens, degree, seeds) -> tuple[int, ...]:
    """Smallest block, over all invariant partitions, holding all seeds.

    The trivial one-block partition always qualifies, so this is total
    for transitive groups.
    """
    seeds = set(seeds)
    best = tuple(range(degree))
    for blocks in brute_invariant_partitions(gens, degree):
        for block in blocks:
            if seeds <= set(block) and len(block) < len(best):
                best = block
    return tuple(sorted(best))


def brute_kernel(elements, blocks) -> set[tuple[int, ...]]:
    """Elements preserving every block of the partition setwise."""
    out = set()
    index = {}
    for bi, block in enumerate(blocks):
        for x in block:
            index[x] = bi
    for e in elements:
        if all(index[e[x]] == index[x] for x in index):
            out.add(e)
    return out


def brute_centralizer(elements, targets) -> set[tuple[int, ...]]:
    out = set()
    for e in elements:
        if all(compose(e, t) == compose(t, e) for t in targets):
            out.add(e)
    return out


def brute_center(elements) -> set[tuple[int, ...]]:
    return brute_centralizer(elements, list(elements))


def brute_power_commutator_subgroup(
    elements, gens, p: int, degree: int
) -> set[tuple[int, ...]]:
    """The subgroup generated by all p-th powers and the commutators.

    In the quotient by this subgroup every element has order dividing p
    and everything commutes, so a central element of order p generates
    a complemented factor exactly when it survives the quotient.
    """
    seeds = []
    for e in elements:
        power = tuple(range(degree))
        for _ in range(p):
            power = compose(power, e)
        seeds.append(power)
    for a, b in combinations(gens, 2):
        seeds.append(compose(compose(inverse(a), inverse(b)), compose(a, b)))
    return brute_elements(seeds, degree)


def brute_splits_over_central(elements, gens, z, degree) -> bool:
    p = element_order(z)
    obstruction = brute_power_commutator_subgroup(elements, gens, p, degree)
    return z not in obstruction


def brute_regular_cyclic(elements, degree):
    """An n-cycle, if the group contains one."""
    for e in sorted(elements):
        power, length = e, 1
        seen = {0}
        x = e[0]
        while x != 0:
            seen.add(x)
            x = e[x]
            length += 1
        if length == degree:
            return e
    return None


def brute_regular_dihedral(elements, degree):
    """A pair (a, z) with <a, z> dihedral of order ``degree`` and regular.

    Checked from the definition: closure of the pair has the right
    order, acts transitively, z is an involution inverting a.
    """
    half = degree // 2
    if degree % 2 != 0 or degree < 4:
        return None
    for a in sorted(elements):
        if element_order(a) != half:
            continue
        inv_a = inverse(a)
        for z in sorted(elements):
            if element_order(z) != 2:
                continue
            if compose(compose(inverse(z), a), z) != inv_a:
                continue
            sub = brute_elements([a, z], degree)
            if len(sub) == degree and is_transitive([a, z], degree):
                return a, z
    return None


def brute_suborbits(elements, degree, point=0) -> list[list[int]]:
    stab = [e for e in elements if e[point] == point]
    orbits = []
    seen = set()
    for start in range(degree):
        if start in seen:
            continue
        orb = {start}
        changed = True
        while changed:
            changed = False
            for e in stab:
                for x in list(orb):
                    if e[x] not in orb:
                        orb.add(e[x])
                        changed = True
        seen |= orb
        orbits.append(sorted(orb))
    return orbits


def brute_orbital_arcs(elements, pair) -> set[tuple[int, int]]:
    return {(e[pair[0]], e[pair[1]]) for e in elements}
