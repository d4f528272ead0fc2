"""Reading and writing generator files.

The format is line oriented.  The first meaningful line is
``degree: <n>``; every following meaningful line is one generator in
1-based cycle notation, e.g. ``(1 2 3)(4 5)``.  Blank lines are skipped
and ``#`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import os
from typing import TextIO

from .chain import PermGroup
from .perms import ParseError, Perm, format_perm, parse_perm

__all__ = ["GroupFileError", "load_group", "loads_group", "dump_group", "dumps_group"]


class GroupFileError(ValueError):
    """Malformed generator file; carries the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def loads_group(text: str, source: str = "<string>") -> PermGroup:
    degree: int | None = None
    gens: list[Perm] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            if not line.startswith("degree:"):
                raise GroupFileError(
                    "expected 'degree: <n>' before any generators", lineno
                )
            value = line[len("degree:") :].strip()
            if not value.isdigit() or int(value) < 1:
                raise GroupFileError(f"bad degree {value!r}", lineno)
            degree = int(value)
            continue
        try:
            gens.append(parse_perm(line, degree))
        except ParseError as exc:
            raise GroupFileError(str(exc), lineno) from exc
    if degree is None:
        raise GroupFileError("empty file: no degree line", 1)
    return PermGroup(gens, degree)


def load_group(path: str | os.PathLike) -> PermGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_group(fh.read(), source=str(path))


def dumps_group(group: PermGroup, *, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {part}" for part in header.splitlines())
    lines.append(f"degree: {group.degree}")
    lines.extend(format_perm(g) for g in group.generators)
    return "\n".join(lines) + "\n"


def dump_group(group: PermGroup, fh: TextIO, *, header: str | None = None) -> None:
    fh.write(dumps_group(group, header=header))
