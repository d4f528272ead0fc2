#!/usr/bin/env python3
"""Regenerate the catalog expectations table from scratch.

Builds every corpus entry (plus the boundary entries the test suite
exercises), computes the facts the catalog verifier checks, and writes
them to src/dgroups/data/expectations.json.  Run from the repository
root after changing a builder; review the diff before committing.
"""

from __future__ import annotations

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from dgroups.actions import InducedAction, is_primitive, minimal_block_systems
from dgroups.catalog import CORPUS, build
from dgroups.classify import classify_case

NOTES = {
    "agl1p(l=4,p=5)": (
        "no regular dihedral subgroup exists at l = 4: every order-10 "
        "subgroup meets the point stabilizer, so the class is neither; "
        "agl1p(l=6,p=7) is the companion entry with a genuine witness"
    ),
    "wreath(k=3,n=4)": (
        "class is both: the fiber shift composed with the top rotation "
        "is a full cycle"
    ),
}

EXTRA = [("agl1p", {"p": 5, "l": 4})]


def row_for(entry) -> dict:
    group = entry.group
    primitive = is_primitive(group)
    systems = []
    if not primitive:
        for system in minimal_block_systems(group):
            kernel = InducedAction(group, system).kernel
            matches = None
            if entry.classification.dihedral is not None:
                evidence = classify_case(
                    group, entry.classification.dihedral, system)
                matches = [int(c) for c in evidence.matches]
            systems.append({
                "num_blocks": system.num_blocks,
                "block_size": system.block_size,
                "kernel_order": kernel.order(),
                "matches": matches,
            })
    row = {
        "degree": group.degree,
        "order": group.order(),
        "class": entry.classification.verdict,
        "primitive": primitive,
        "minimal_systems": systems,
    }
    if entry.key in NOTES:
        row["note"] = NOTES[entry.key]
    return row


def main() -> None:
    table = {}
    for entry_id, params in CORPUS + EXTRA:
        entry = build(entry_id, **params)
        table[entry.key] = row_for(entry)
        print(f"{entry.key:24s} class {entry.classification.verdict:8s} "
              f"systems {len(table[entry.key]['minimal_systems'])}")
    out = (pathlib.Path(__file__).resolve().parent.parent
           / "src" / "dgroups" / "data" / "expectations.json")
    out.write_text(json.dumps(table, indent=2, sort_keys=True) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
