"""Orbital graphs, their shape tests, and Cayley graph helpers.

An orbital graph is the orbit of one ordered point pair under the
group; its arcs are closed under the group action by construction, so
every group element is an automorphism.  Suborbits of the stabilizer of
a base point index the orbital graphs rooted there.

Shape predicates used by the classification live here as explicit
certificate producers: lex blowups hand back the quotient arc set,
complete bipartite checks hand back the two parts, and the circulant
component check hands back one permutation per component that fixes
the component setwise, preserves its arcs, and cycles its points.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .actions import BlockSystem, point_stabilizer, orbits, restrict, is_regular
from .chain import PermGroup
from .perms import Perm

__all__ = [
    "DiagonalArc",
    "NotRegular",
    "IdentityInS",
    "Digraph",
    "OrbitalGraph",
    "ComponentCertificate",
    "suborbits",
    "orbital_graph",
    "orbital_graphs",
    "complete_bipartite_parts",
    "lex_blowup_quotient",
    "quotient_graph",
    "cayley_graph",
    "circulant_components_check",
    "to_dot",
]


class DiagonalArc(ValueError):
    """Orbital graphs need two distinct base points."""


class NotRegular(ValueError):
    """Cayley graphs are defined over a regular subgroup."""


class IdentityInS(ValueError):
    """Cayley connection sets must not contain the identity."""


class Digraph:
    """An arc set over a fixed point range, with weak-connectivity helpers."""

    __slots__ = ("degree", "arcs", "_out")

    def __init__(self, degree: int, arcs: Iterable[tuple[int, int]]):
        self.degree = degree
        self.arcs = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in self.arcs:
            if not (0 <= u < degree and 0 <= v < degree):
                raise ValueError(f"arc ({u}, {v}) outside degree {degree}")
        out: dict[int, list[int]] = {}
        for u, v in self.arcs:
            out.setdefault(u, []).append(v)
            out.setdefault(v, []).append(u)
        self._out = out

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def is_self_paired(self) -> bool:
        return all((v, u) in self.arcs for u, v in self.arcs)

    def components(self) -> list[list[int]]:
        """Weak components as sorted lists, ordered by smallest point."""
        seen = bytearray(self.degree)
        comps = []
        for start in range(self.degree):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = 1
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self._out.get(x, ()):
                    if not seen[y]:
                        seen[y] = 1
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def undirected_pairs(self) -> list[tuple[int, int]]:
        return sorted({(min(u, v), max(u, v)) for u, v in self.arcs})


class OrbitalGraph(Digraph):
    """Orbit of one ordered pair under the group."""

    __slots__ = ("base_pair",)

    def __init__(self, degree: int, arcs: Iterable[tuple[int, int]], base_pair: tuple[int, int]):
        super().__init__(degree, arcs)
        self.base_pair = (int(base_pair[0]), int(base_pair[1]))

    def __repr__(self) -> str:
        return (
            f"OrbitalGraph(base={self.base_pair}, arcs={self.num_arcs}, "
            f"degree={self.degree})"
        )


def suborbits(group: PermGroup, point: int = 0) -> list[list[int]]:
    """Orbits of the stabilizer of ``point``, the trivial one included."""
    return orbits(point_stabilizer(group, point))


def orbital_graph(group: PermGroup, alpha: int, beta: int) -> OrbitalGraph:
    """The orbital graph generated by the arc (alpha, beta)."""
    if alpha == beta:
        raise DiagonalArc("base pair must consist of two distinct points")
    start = (alpha, beta)
    arcs = {start}
    queue = deque([start])
    while queue:
        u, v = queue.popleft()
        for g in group.generators:
            arc = (g.images[u], g.images[v])
            if arc not in arcs:
                arcs.add(arc)
                queue.append(arc)
    return OrbitalGraph(group.degree, arcs, start)


def orbital_graphs(group: PermGroup, point: int = 0) -> list[OrbitalGraph]:
    """One orbital graph per non-diagonal suborbit at ``point``."""
    graphs = []
    for sub in suborbits(group, point):
        if point in sub:
            continue
        graphs.append(orbital_graph(group, point, sub[0]))
    return graphs


def complete_bipartite_parts(graph: Digraph) -> tuple[list[int], list[int]] | None:
    """The two parts if the graph is a complete bipartite K_{m,m}, else None."""
    n = graph.degree
    if n % 2 or not graph.arcs:
        return None
    color = [-1] * n
    color[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in graph._out.get(x, ()):
            if color[y] == -1:
                color[y] = 1 - color[x]
                queue.append(y)
            elif color[y] == color[x]:
                return None
    if any(c == -1 for c in color):
        return None
    left = [x for x in range(n) if color[x] == 0]
    right = [x for x in range(n) if color[x] == 1]
    if len(left) != len(right):
        return None
    expected = set()
    for u in left:
        for v in right:
            expected.add((u, v))
            expected.add((v, u))
    if graph.arcs != frozenset(expected):
        return None
    return left, right


def lex_blowup_quotient(
    graph: Digraph, system: BlockSystem
) -> set[tuple[int, int]] | None:
    """Block-level arcs if the graph is a lex blowup over ``system``.

    A lex blowup has no arcs inside a block, and between any ordered
    pair of blocks either no arcs or all block_size**2 of them.  Returns
    the set of saturated block pairs when that holds exactly.
    """
    if system.degree != graph.degree:
        raise ValueError("system degree does not match graph degree")
    b = system.block_size
    bundles: dict[tuple[int, int], int] = {}
    for u, v in graph.arcs:
        bu, bv = system.block_of[u], system.block_of[v]
        if bu == bv:
            return None
        bundles[(bu, bv)] = bundles.get((bu, bv), 0) + 1
    full = b * b
    if any(count != full for count in bundles.values()):
        return None
    return set(bundles)


def quotient_graph(graph: Digraph, system: BlockSystem) -> set[tuple[int, int]]:
    """Arcs between distinct blocks induced at the block level."""
    if system.degree != graph.degree:
        raise ValueError("system degree does not match graph degree")
    out = set()
    for u, v in graph.arcs:
        bu, bv = system.block_of[u], system.block_of[v]
        if bu != bv:
            out.add((bu, bv))
    return out


def cayley_graph(subgroup: PermGroup, connection: Sequence[Perm]) -> Digraph:
    """Arcs (p, s(p)) over a regular subgroup, one bundle per s in S."""
    if not is_regular(subgroup):
        raise NotRegular("connection-set graphs need a regular subgroup")
    arcs = []
    for s in connection:
        if s.is_identity():
            raise IdentityInS("connection set must not contain the identity")
        if s not in subgroup:
            raise ValueError("connection set member outside the subgroup")
        for p in range(subgroup.degree):
            arcs.append((p, s.images[p]))
    return Digraph(subgroup.degree, arcs)


@dataclass(frozen=True)
class ComponentCertificate:
    """One weak component plus a permutation cycling it, if found.

    The element comes from the group when some member restricts to a
    full cycle on the component; otherwise it may be a woven cycle that
    preserves the component's arcs without belonging to the group.
    """

    component: tuple[int, ...]
    element: Perm | None

    @property
    def ok(self) -> bool:
        return self.element is not None


def _cycles_within(g: Perm, component: Sequence[int]) -> list[list[int]] | None:
    """Cycles of ``g`` on the component, or None if it is not stable."""
    comp = set(component)
    if any(g.images[x] not in comp for x in comp):
        return None
    cycles = []
    placed: set[int] = set()
    for start in component:
        if start in placed:
            continue
        cyc = [start]
        placed.add(start)
        x = g.images[start]
        while x != start:
            cyc.append(x)
            placed.add(x)
            x = g.images[x]
        cycles.append(cyc)
    return cycles


def _weave_pair(
    one: list[int],
    two: list[int],
    arcs: set[tuple[int, int]],
    degree: int,
) -> Perm | None:
    """Interleave two equal-length cycles into one cycle fixing the arcs.

    The weave alternates between the cycles, so its square restricts to
    the element the cycles came from; every alternation offset is tried
    and the first arc-preserving one comes back as a permutation of the
    whole domain, identity off the component.
    """
    m = len(one)
    for shift in range(m):
        images = list(range(degree))
        for i, x in enumerate(one):
            images[x] = two[(i + shift) % m]
        for j, y in enumerate(two):
            images[y] = one[(j + 1 - shift) % m]
        if all((images[u], images[v]) in arcs for u, v in arcs):
            return Perm(tuple(images))
    return None


def circulant_components_check(
    graph: Digraph,
    group: PermGroup,
    witness_subgroup: PermGroup | None = None,
    cap_order: int = 10**6,
) -> list[ComponentCertificate]:
    """Certify each weak component as circulant, or record the failure.

    For each component the search first wants a group element
    stabilizing the component setwise whose restriction to it is one
    full cycle; group elements preserve arcs for free, so that settles
    it.  Elements of the witness subgroup are tried first, then the
    whole group, in enumeration order.  When no member restricts to a
    full cycle, any member splitting the component into two equal
    cycles is woven into a single alternating cycle instead; the weave
    must be checked against the induced arcs explicitly since it need
    not lie in the group.
    """
    candidates: list[Perm] = []
    if witness_subgroup is not None:
        candidates.extend(witness_subgroup.elements(cap_order))
    candidates.extend(group.elements(cap_order))
    out = []
    for comp in graph.components():
        hit = None
        splits: list[list[list[int]]] = []
        for g in candidates:
            cycles = _cycles_within(g, comp)
            if cycles is None:
                continue
            if len(cycles) == 1:
                hit = g
                break
            if len(cycles) == 2 and len(cycles[0]) == len(cycles[1]):
                splits.append(cycles)
        if hit is None and splits:
            comp_set = set(comp)
            arcs = {
                (u, v)
                for u, v in graph.arcs
                if u in comp_set and v in comp_set
            }
            for one, two in splits:
                hit = _weave_pair(one, two, arcs, graph.degree)
                if hit is not None:
                    break
        out.append(ComponentCertificate(tuple(comp), hit))
    return out


def to_dot(graph: Digraph, name: str = "orbital") -> str:
    """DOT text, 1-based points; self-paired graphs come out undirected."""
    safe = "".join(ch if ch.isalnum() or ch == "_" else "_" for ch in name) or "orbital"
    lines = []
    if graph.is_self_paired():
        lines.append(f"graph {safe} {{")
        for u, v in graph.undirected_pairs():
            lines.append(f"  {u + 1} -- {v + 1};")
    else:
        lines.append(f"digraph {safe} {{")
        for u, v in sorted(graph.arcs):
            lines.append(f"  {u + 1} -> {v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
