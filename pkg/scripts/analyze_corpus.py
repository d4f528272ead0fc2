#!/usr/bin/env python3
"""Run the full analysis pipeline over every corpus entry and summarize.

One block per entry: class and witness, then per minimal system the
kernel order and matched cases, then an orbital-graph tally (connected
graphs are checked for self-pairing, disconnected ones for circulant
components).  A nonzero exit means some entry violated an expected
shape, so this doubles as a slow smoke test.  Pass --json DIR to keep
the full report documents.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from dgroups.catalog import CORPUS, build, entry_key
from dgroups.classify import analyze_group


def safe_name(key: str) -> str:
    return (key.replace("(", "_").replace(")", "")
            .replace(",", "_").replace("=", "-"))


def summarize(key: str, report) -> list[str]:
    problems = []
    doc = report.to_dict()
    print(f"{key}: degree {doc['degree']}, order {doc['order']}, "
          f"class {doc['class']}")
    if doc["primitive"]:
        print(f"  primitive ({doc['primitivity']}), no block systems")
    for system in doc["systems"]:
        ev = system["evidence"]
        print(f"  system {ev['num_blocks']} blocks of {ev['block_size']}: "
              f"kernel {ev['kernel_order']}, matches {ev['matches']}")
    connected = sum(1 for o in doc["orbitals"] if o["connected"])
    paired = sum(1 for o in doc["orbitals"]
                 if o["connected"] and o["self_paired"])
    lex = sum(1 for o in doc["orbitals"] if o["lex_blowup_of"] is not None)
    certified = uncertified = 0
    for o in doc["orbitals"]:
        if o["circulant_components"] is None:
            continue
        for cert in o["circulant_components"]:
            if cert["ok"]:
                certified += 1
            else:
                uncertified += 1
    print(f"  orbitals: {len(doc['orbitals'])} graphs, {connected} connected "
          f"({paired} self-paired), {lex} lex blowups, "
          f"{certified} circulant components certified, "
          f"{uncertified} uncertified")
    if doc["undirectedness"] and doc["undirectedness"]["violations"]:
        problems.append(f"{key}: undirectedness violations "
                        f"{doc['undirectedness']['violations']}")
    if uncertified:
        problems.append(f"{key}: {uncertified} uncertified circulant "
                        f"components")
    for warning in doc["warnings"]:
        print(f"  warning: {warning}")
    return problems


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--keys", nargs="*", default=None,
                        help="only entries whose key contains one of these")
    parser.add_argument("--json", metavar="DIR", default=None,
                        help="write each full report document to DIR")
    args = parser.parse_args()

    out_dir = None
    if args.json is not None:
        out_dir = pathlib.Path(args.json)
        out_dir.mkdir(parents=True, exist_ok=True)

    problems: list[str] = []
    for entry_id, params in CORPUS:
        key = entry_key(entry_id, params)
        if args.keys and not any(k in key for k in args.keys):
            continue
        entry = build(entry_id, **params)
        report = analyze_group(entry.group, input_id=key)
        problems.extend(summarize(key, report))
        if out_dir is not None:
            path = out_dir / f"{safe_name(key)}.report.json"
            path.write_text(json.dumps(report.to_dict(), sort_keys=True,
                                       indent=2) + "\n")
            print(f"  wrote {path}")
        print()

    if problems:
        print("PROBLEMS:")
        for p in problems:
            print(f"  {p}")
        return 1
    print("all entries match the expected shapes")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
