"""Permutations of {0..n-1} stored as immutable image tables.

Composition follows the right-action convention: ``p * q`` applies ``p``
first and then ``q``, so exponent notation chains the natural way,
``x^(p*q) == (x^p)^q``.  Points are 0-based everywhere in memory; the
cycle-notation parser and formatter translate to 1-based text at the
boundary, and so does every other piece of user-facing output.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator, Sequence

__all__ = ["Perm", "ParseError", "parse_perm", "format_perm"]


class ParseError(ValueError):
    """Malformed cycle notation; ``position`` is the 0-based text offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Perm:
    """A permutation given by its image table.

    ``Perm((1, 0, 2))`` swaps points 0 and 1 and fixes 2.  Instances are
    immutable value objects: equality and hashing go through the image
    tuple, so they can live in sets and dict keys.
    """

    __slots__ = ("images",)

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        seen = bytearray(n)
        for v in imgs:
            if not isinstance(v, int) or not 0 <= v < n:
                raise ValueError(f"image {v!r} out of range for degree {n}")
            if seen[v]:
                raise ValueError(f"image {v} repeated: not a bijection")
            seen[v] = 1
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Perm":
        """Build from 0-based disjoint cycles; unmentioned points are fixed."""
        imgs = list(range(degree))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} out of range for degree {degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated across cycles")
                seen.add(pt)
            for i, pt in enumerate(cyc):
                imgs[pt] = cyc[(i + 1) % len(cyc)]
        return cls(imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        # apply self first, then other
        if len(self.images) != len(other.images):
            raise ValueError(
                f"degree mismatch: {len(self.images)} vs {len(other.images)}"
            )
        oth = other.images
        return Perm(oth[v] for v in self.images)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Perm(inv)

    def __pow__(self, exponent: int) -> "Perm":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Perm.identity(len(self.images))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self, g: "Perm") -> "Perm":
        """Return self^g = g^-1 * self * g (maps a^self -> (a^g)^(self^g))."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def min_moved(self) -> int | None:
        """Smallest moved point, or None for the identity."""
        for i, v in enumerate(self.images):
            if i != v:
                return i
        return None

    def moved_points(self) -> list[int]:
        return [i for i, v in enumerate(self.images) if i != v]

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, sorted."""
        seen = bytearray(len(self.images))
        out = []
        for i in range(len(self.images)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = 1
            j = self.images[i]
            while j != i:
                seen[j] = 1
                cyc.append(j)
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted cycle lengths including fixed points."""
        return tuple(sorted(len(c) for c in self.cycles(include_fixed=True)))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Perm.parse({format_perm(self)!r}, {len(self.images)})"

    @staticmethod
    def parse(text: str, degree: int) -> "Perm":
        return parse_perm(text, degree)


_TOKEN = re.compile(r"\s+|,|\(|\)|\d+")


def parse_perm(text: str, degree: int) -> Perm:
    """Parse 1-based disjoint-cycle notation like ``(1 2 3)(4 5)``.

    Whitespace and commas between points are interchangeable; ``()``
    denotes the identity.  Out-of-range points, repeated points and
    malformed parentheses raise :class:`ParseError` carrying the text
    position of the offending token.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    cycles: list[list[int]] = []
    seen: set[int] = set()
    current: list[int] | None = None
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tok = m.group()
        if tok.isspace() or tok == ",":
            pos = m.end()
            continue
        if tok == "(":
            if current is not None:
                raise ParseError("nested '(' in cycle", pos)
            current = []
        elif tok == ")":
            if current is None:
                raise ParseError("unmatched ')'", pos)
            if len(current) == 1:
                raise ParseError("cycle of length 1 is not allowed", pos)
            cycles.append(current)
            current = None
        else:  # number
            if current is None:
                raise ParseError(f"point {tok} outside any cycle", pos)
            value = int(tok)
            if not 1 <= value <= degree:
                raise ParseError(
                    f"point {value} out of range 1..{degree}", pos
                )
            if value - 1 in seen:
                raise ParseError(f"point {value} repeated", pos)
            seen.add(value - 1)
            current.append(value - 1)
        pos = m.end()
    if current is not None:
        raise ParseError("unclosed '('", len(text))
    if not cycles and not seen and "(" not in text:
        raise ParseError("no cycles found (use '()' for the identity)", 0)
    return Perm.from_cycles(cycles, degree)


def format_perm(p: Perm) -> str:
    """Canonical 1-based cycle string: cycles sorted by smallest point."""
    cycs = p.cycles()
    if not cycs:
        return "()"
    return "".join(
        "(" + " ".join(str(pt + 1) for pt in cyc) + ")" for cyc in cycs
    )
