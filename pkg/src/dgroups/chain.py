"""Deterministic stabilizer chains and the group objects built on them.

The chain is produced by the incremental Schreier-Sims method with no
randomised sifting: generators are inserted one at a time, every Schreier
generator is checked, and each new base point is the smallest point moved
by the residue that forced it.  Two runs over the same generator sequence
therefore give identical bases, transversals, orders and element
enumeration order, which the report layer relies on.

``base_prefix`` forces the leading base points.  The pointwise stabilizer
of the prefix is then generated by the strong generators stored at the
levels past the prefix, which is how point stabilizers and block-action
kernels are extracted.
"""

from __future__ import annotations

import itertools
from collections import deque
from functools import reduce
from operator import mul
from typing import Iterable, Iterator, Sequence

from .perms import Perm

__all__ = [
    "OrderExceedsCap",
    "NotCentral",
    "NotPrimeOrder",
    "StabilizerChain",
    "PermGroup",
]


class OrderExceedsCap(RuntimeError):
    """Raised when an enumeration would exceed the caller's size cap."""

    def __init__(self, order: int, cap: int):
        super().__init__(f"group order {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap


class NotCentral(ValueError):
    """The element handed to the splitting test is not central."""


class NotPrimeOrder(ValueError):
    """The element handed to the splitting test has composite order."""


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[Perm] = []
        # transversal[x] maps the base point to x; rebuilt on verification
        self.transversal: dict[int, Perm] = {point: Perm.identity(degree)}


class StabilizerChain:
    """Mutable chain; wrap in :class:`PermGroup` for the frozen interface."""

    def __init__(self, degree: int, base_prefix: Sequence[int] = ()):
        if degree < 1:
            raise ValueError("degree must be positive")
        prefix = tuple(base_prefix)
        if len(set(prefix)) != len(prefix):
            raise ValueError("base prefix contains repeats")
        for p in prefix:
            if not 0 <= p < degree:
                raise ValueError(f"prefix point {p} out of range")
        self.degree = degree
        self.base_prefix = prefix
        self.levels: list[_Level] = [_Level(p, degree) for p in prefix]

    def base(self) -> list[int]:
        return [lvl.point for lvl in self.levels]

    def gens_at(self, i: int) -> list[Perm]:
        """Strong generators fixing the first ``i`` base points."""
        return [g for lvl in self.levels[i:] for g in lvl.gens]

    def order(self) -> int:
        o = 1
        for lvl in self.levels:
            o *= len(lvl.transversal)
        return o

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        """Strip transversal factors from ``g``.

        Returns ``(residue, i)`` where ``i`` is the level whose orbit the
        residue escaped, or ``len(self.levels)`` when every level was
        passed.  ``g`` is a member iff the residue is the identity.
        """
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            u = lvl.transversal.get(g.images[lvl.point])
            if u is None:
                return g, i
            g = g * u.inverse()
        return g, len(self.levels)

    def insert(self, g: Perm) -> bool:
        """Add ``g`` to the group; returns False if it was already inside."""
        if g.degree != self.degree:
            raise ValueError("degree mismatch")
        residue, j = self.sift(g)
        if residue.is_identity():
            return False
        self._place(residue, j)
        self._verify_from(j)
        return True

    def _place(self, residue: Perm, j: int) -> None:
        if j == len(self.levels):
            # residue fixes every existing base point, so min_moved is new
            self.levels.append(_Level(residue.min_moved(), self.degree))
        self.levels[j].gens.append(residue)

    def _rebuild_orbit(self, i: int) -> None:
        lvl = self.levels[i]
        gens = self.gens_at(i)
        trans = {lvl.point: Perm.identity(self.degree)}
        queue = [lvl.point]
        for x in queue:
            ux = trans[x]
            for s in gens:
                y = s.images[x]
                if y not in trans:
                    trans[y] = ux * s
                    queue.append(y)
        lvl.transversal = trans

    def _verify_level(self, i: int) -> int | None:
        """Rebuild level ``i`` and test its Schreier generators.

        Returns the level where a new strong generator was placed, or
        None when the level is consistent with the chain below it.
        """
        self._rebuild_orbit(i)
        lvl = self.levels[i]
        gens = self.gens_at(i)
        for x in list(lvl.transversal):
            ux = lvl.transversal[x]
            for s in gens:
                schreier = ux * s * lvl.transversal[s.images[x]].inverse()
                if schreier.is_identity():
                    continue
                residue, j = self.sift(schreier, i + 1)
                if residue.is_identity():
                    continue
                self._place(residue, j)
                return j
        return None

    def _verify_from(self, start: int) -> None:
        # Climb towards the root, dropping back down whenever a level
        # gains a generator; levels deeper than the current one stay
        # consistent because placements never touch their gen sets.
        i = start
        while i >= 0:
            placed_at = self._verify_level(i)
            i = placed_at if placed_at is not None else i - 1


class PermGroup:
    """Permutation group on {0..degree-1}; immutable once constructed."""

    def __init__(
        self,
        generators: Iterable[Perm],
        degree: int | None = None,
        *,
        base_prefix: Sequence[int] = (),
    ):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree does not match group degree")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity())
        self.base_prefix = tuple(base_prefix)
        self._chain = StabilizerChain(degree, self.base_prefix)
        for g in self.generators:
            self._chain.insert(g)
        self._order = self._chain.order()

    # -- size and membership -------------------------------------------

    def order(self) -> int:
        return self._order

    def is_trivial(self) -> bool:
        return self._order == 1

    def __contains__(self, p: Perm) -> bool:
        if not isinstance(p, Perm) or p.degree != self.degree:
            return False
        residue, _ = self._chain.sift(p)
        return residue.is_identity()

    def sift(self, p: Perm) -> Perm:
        """Residue of ``p`` after stripping; identity iff ``p`` is a member."""
        residue, _ = self._chain.sift(p)
        return residue

    def base(self) -> list[int]:
        return self._chain.base()

    def strong_generators(self) -> list[Perm]:
        return self._chain.gens_at(0)

    def prefix_fixing_generators(self) -> list[Perm]:
        """Generators of the pointwise stabilizer of ``base_prefix``."""
        return self._chain.gens_at(len(self.base_prefix))

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def coset_representative(self, x: Perm) -> Perm:
        """Canonical representative of the right coset (self)*x.

        Greedily minimizes the images of the chain's base points, so two
        permutations get the same representative iff they lie in the same
        right coset.  For the trivial subgroup this is ``x`` itself.
        """
        rep = x
        for lvl in self._chain.levels:
            best_o = lvl.point
            best_img = rep.images[lvl.point]
            for o in lvl.transversal:
                img = rep.images[o]
                if img < best_img:
                    best_img, best_o = img, o
            if best_o != lvl.point:
                rep = lvl.transversal[best_o] * rep
        return rep

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self._order})"

    # -- enumeration ----------------------------------------------------

    def elements(self, cap: int | None = None) -> Iterator[Perm]:
        """All elements, deepest transversal varying slowest.

        Raises :class:`OrderExceedsCap` up front when the order is over
        ``cap``; pass None to enumerate regardless of size.
        """
        if cap is not None and self._order > cap:
            raise OrderExceedsCap(self._order, cap)
        transversals = [list(lvl.transversal.values()) for lvl in self._chain.levels]
        if not transversals:
            yield Perm.identity(self.degree)
            return
        for combo in itertools.product(*reversed(transversals)):
            yield reduce(mul, combo)

    # -- predicates -----------------------------------------------------

    def is_abelian(self) -> bool:
        return all(
            a * b == b * a for a, b in itertools.combinations(self.generators, 2)
        )

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(
            g in other for g in self.generators
        )

    def same_group_as(self, other: "PermGroup") -> bool:
        return self._order == other.order() and self.is_subgroup_of(other)

    def is_normal_in(self, other: "PermGroup") -> bool:
        """True when ``other`` normalizes this group (self need not be inside)."""
        return all(
            h.conjugate(g) in self
            for h in self.generators
            for g in other.generators
        )

    # -- derived constructions ------------------------------------------

    def normal_closure(self, seeds: Iterable[Perm]) -> "PermGroup":
        """Smallest subgroup containing ``seeds`` and normalized by self."""
        chain = StabilizerChain(self.degree)
        kept: list[Perm] = []
        queue = deque(seeds)
        while queue:
            x = queue.popleft()
            if not chain.insert(x):
                continue
            kept.append(x)
            queue.extend(x.conjugate(g) for g in self.generators)
        return PermGroup(kept, self.degree)

    def derived_subgroup(self) -> "PermGroup":
        commutators = [
            a.inverse() * b.inverse() * a * b
            for a, b in itertools.combinations(self.generators, 2)
        ]
        return self.normal_closure(commutators)

    def derived_series(self) -> list["PermGroup"]:
        """Descending series ending at the first repeated term."""
        series = [self]
        while True:
            nxt = series[-1].derived_subgroup()
            if nxt.order() == series[-1].order():
                return series
            series.append(nxt)
            if nxt.is_trivial():
                return series

    def centralizer(self, target: "Perm | PermGroup", cap: int = 10**6) -> "PermGroup":
        """Centralizer of an element or a subgroup inside this group.

        Exhaustive filtration over the element list, capped by order; the
        kept generators are thinned so the result carries a small
        generating set rather than every commuting element.
        """
        if self._order > cap:
            raise OrderExceedsCap(self._order, cap)
        targets = (
            [target] if isinstance(target, Perm) else list(target.generators)
        )
        chain = StabilizerChain(self.degree)
        kept: list[Perm] = []
        for g in self.elements():
            if all(g * t == t * g for t in targets):
                if chain.insert(g):
                    kept.append(g)
        return PermGroup(kept, self.degree)

    def center(self, cap: int = 10**6) -> "PermGroup":
        return self.centralizer(self, cap=cap)

    def splits_over_central_prime(self, z: Perm, p: int | None = None) -> bool:
        """Whether the group is a semidirect product over central <z>.

        ``z`` must be a central member of prime order p (checked against
        the explicit ``p`` when one is passed).  The test is membership
        of z in the subgroup generated by commutators and p-th powers,
        which is where any obstruction to a complement of a central
        prime-order subgroup lives.
        """
        if z not in self:
            raise ValueError("element is not in the group")
        if any(z * g != g * z for g in self.generators):
            raise NotCentral("element is not central")
        order = z.order()
        if not _is_prime(order):
            raise NotPrimeOrder(f"element order {order} is not prime")
        if p is not None and p != order:
            raise NotPrimeOrder(f"element order {order} does not match p={p}")
        seeds = [g ** order for g in self.generators]
        seeds += [
            a.inverse() * b.inverse() * a * b
            for a, b in itertools.combinations(self.generators, 2)
        ]
        obstruction = self.normal_closure(seeds)
        return z not in obstruction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
