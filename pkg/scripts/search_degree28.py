#!/usr/bin/env python3
"""Run the degree-28 subgroup search and print its transcript.

The builder looks for an order-96 subgroup of the order-2688 semilinear
group over GF(64) whose 28-point coset action is faithful and carries a
regular dihedral subgroup.  The seeded phase enumerates 4-dimensional
translation subspaces invariant under a multiplier-twisted squaring map
and extends each to a 2^4.6 subgroup; the fallback phase closes
two-generator subgroups from elements of dividing order, up to a budget.
Both phases failing is the expected outcome (the group has no dihedral
subgroup of order 28); this script exists to rerun the experiment with
a different budget and inspect the counters.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from dgroups.catalog import SearchFailed, build


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fallback-cap", type=int, default=2000,
                        help="generator pairs the fallback phase may close")
    args = parser.parse_args()

    started = time.monotonic()
    try:
        entry = build("gammaL164_deg28", fallback_cap=args.fallback_cap)
    except SearchFailed as exc:
        elapsed = time.monotonic() - started
        print(f"search failed after {elapsed:.1f}s: {exc}")
        print(json.dumps(exc.transcript, indent=2, sort_keys=True))
        return 0
    elapsed = time.monotonic() - started
    print(f"search SUCCEEDED after {elapsed:.1f}s (unexpected; the target "
          f"group provably lacks a dihedral subgroup of order 28)")
    print(f"degree {entry.group.degree}, order {entry.group.order()}")
    print(json.dumps(entry.transcript, indent=2, sort_keys=True))
    return 1


if __name__ == "__main__":
    raise SystemExit(main())
