"""Command line front end.

Four subcommands: ``analyze`` runs the full pipeline on a group file,
``catalog`` lists or builds the bundled example groups, ``graph``
inspects orbital graphs, and ``verify`` re-runs the structural check
suites.  Every command prints a single report document as JSON with
sorted keys, so byte-identical inputs give byte-identical output.

Exit codes: 0 success, 1 internal error, 2 input contract violation,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys
import time

from . import catalog as cat
from .actions import (
    IndexExceedsCap,
    IntransitiveGroup,
    is_primitive,
    minimal_block_systems,
)
from .chain import OrderExceedsCap, PermGroup
from .classify import NotDGroup, analyze_group, lemma_suite
from .gf import UnsupportedOrder
from .io import GroupFileError, dumps_group, load_group
from .orbital import DiagonalArc, orbital_graph, orbital_graphs, suborbits, to_dot
from .perms import ParseError, format_perm
from .regular import OddDegree

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3

# rows re-checked by ``verify --suite tables``
TABLE_ROWS: list[tuple[str, dict[str, int]]] = [
    ("sym", {"n": 4}),
    ("alt", {"n": 4}),
    ("psl27", {}),
    ("pgl2q_line", {"q": 5}),
    ("pgl2q_line", {"q": 7}),
    ("pgl2q_line", {"q": 11}),
    ("m11", {}),
]


def _document(payload: dict, input_info: dict, warnings=(), timing=None) -> dict:
    return {
        "schema_version": 1,
        "input": input_info,
        "payload": payload,
        "timing": timing,
        "warnings": list(warnings),
    }


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if out:
        pathlib.Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _timing_block(started: float | None) -> dict | None:
    if started is None:
        return None
    return {"seconds": round(time.monotonic() - started, 3)}


def _witness_dict(witness) -> dict | None:
    if witness is None:
        return None
    out = {
        "rotation": format_perm(witness.rotation),
        "subgroup_order": witness.subgroup_order,
    }
    if witness.reflection is not None:
        out["reflection"] = format_perm(witness.reflection)
    return out


# -- analyze -----------------------------------------------------------------


def _cmd_analyze(args) -> int:
    group = load_group(args.groupfile)
    started = time.monotonic() if args.timing else None
    input_id = pathlib.Path(args.groupfile).stem
    report = analyze_group(
        group,
        input_id=input_id,
        cap_order=args.cap_order,
        require_dgroup=args.require_dgroup,
    )
    payload = report.to_dict()
    warnings = payload.pop("warnings")
    doc = _document(
        payload,
        {"source": args.groupfile, "degree": group.degree,
         "order": group.order()},
        warnings=warnings,
        timing=_timing_block(started),
    )
    _emit(doc, args.out)
    return EXIT_OK


# -- catalog -----------------------------------------------------------------


def _parse_params(text: str | None) -> dict[str, int]:
    if not text:
        return {}
    params: dict[str, int] = {}
    for piece in text.split(","):
        if "=" not in piece:
            raise cat.BadParams(f"malformed parameter {piece!r}, want name=value")
        name, _, raw = piece.partition("=")
        name = name.strip()
        try:
            params[name] = int(raw)
        except ValueError:
            raise cat.BadParams(f"parameter {name!r} must be an integer") from None
    return params


def _safe_name(key: str) -> str:
    return (key.replace("(", "_").replace(")", "")
            .replace(",", "_").replace("=", "-").rstrip("_"))


def _entry_metadata(entry: cat.CatalogEntry) -> dict:
    meta = {
        "id": entry.id,
        "params": entry.params,
        "key": entry.key,
        "description": entry.description,
        "degree": entry.group.degree,
        "order": entry.group.order(),
        "class": entry.classification.verdict,
        "witnesses": {
            "cyclic": _witness_dict(entry.classification.cyclic),
            "dihedral": _witness_dict(entry.classification.dihedral),
        },
        "expected": entry.expected,
    }
    if entry.transcript is not None:
        meta["search_transcript"] = entry.transcript
    return meta


def _cmd_catalog(args) -> int:
    if args.list:
        rows = [
            {"id": entry_id, "summary": cat.describe(entry_id),
             "params": cat.param_schema(entry_id)}
            for entry_id in cat.catalog_ids()
        ]
        doc = _document({"entries": rows}, {"command": "catalog --list"})
        _emit(doc, args.out)
        return EXIT_OK

    params = _parse_params(args.params)
    input_info = {"command": f"catalog --build {args.build}", "params": params}
    try:
        entry = cat.build(args.build, cap_order=args.cap_order, **params)
    except cat.SearchFailed as exc:
        doc = _document(
            {"status": "search-failed", "reason": str(exc),
             "transcript": exc.transcript},
            input_info,
        )
        _emit(doc, args.out)
        return EXIT_VERIFY

    out_dir = pathlib.Path(args.dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    base = _safe_name(entry.key)
    group_path = out_dir / f"{base}.group"
    meta_path = out_dir / f"{base}.meta.json"
    group_path.write_text(dumps_group(entry.group, header=entry.description))
    meta = _entry_metadata(entry)
    meta_path.write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")

    payload = dict(meta)
    payload["files"] = {"group": str(group_path), "metadata": str(meta_path)}
    doc = _document(payload, input_info)
    _emit(doc, args.out)
    return EXIT_OK


# -- graph -------------------------------------------------------------------


def _graph_summary(graph) -> dict:
    connected = graph.is_connected()
    self_paired = graph.is_self_paired()
    parts = []
    if connected:
        parts.append("connected")
    else:
        parts.append(f"disconnected ({len(graph.components())} components)")
    parts.append("self-paired" if self_paired else "not self-paired")
    return {
        "base_pair": [graph.base_pair[0] + 1, graph.base_pair[1] + 1],
        "arcs": graph.num_arcs,
        "connected": connected,
        "self_paired": self_paired,
        "components": len(graph.components()),
        "statement": ", ".join(parts),
    }


def _cmd_graph(args) -> int:
    group = load_group(args.groupfile)
    input_info = {"source": args.groupfile, "degree": group.degree,
                  "order": group.order()}

    if args.all_suborbits:
        subs = suborbits(group)
        graphs = orbital_graphs(group)
        payload = {
            "point": 1,
            "suborbits": [[p + 1 for p in sub] for sub in subs],
            "graphs": [_graph_summary(g) for g in graphs],
        }
        doc = _document(payload, input_info)
        _emit(doc, args.out)
        return EXIT_OK

    try:
        a_text, _, b_text = args.pair.partition(",")
        alpha, beta = int(a_text) - 1, int(b_text) - 1
    except ValueError:
        print(f"malformed pair {args.pair!r}, want two integers a,b",
              file=sys.stderr)
        return EXIT_INPUT
    if not (0 <= alpha < group.degree and 0 <= beta < group.degree):
        print(f"pair {args.pair} out of range for degree {group.degree}",
              file=sys.stderr)
        return EXIT_INPUT
    graph = orbital_graph(group, alpha, beta)
    payload = _graph_summary(graph)
    if args.dot:
        name = pathlib.Path(args.dot).stem
        pathlib.Path(args.dot).write_text(to_dot(graph, name=name))
        payload["dot_file"] = args.dot
    doc = _document(payload, input_info)
    _emit(doc, args.out)
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def _tables_rows(max_order: int | None) -> list[dict]:
    rows = []
    for entry_id, params in TABLE_ROWS:
        key = cat.entry_key(entry_id, params)
        expected = cat.expectations_table().get(key)
        if (max_order is not None and expected is not None
                and expected["order"] > max_order):
            rows.append({"name": f"tables:{key}", "status": "skipped",
                         "detail": f"order {expected['order']} exceeds "
                                   f"--max-order {max_order}"})
            continue
        entry = cat.build(entry_id, **params)
        for check in cat.verify_entry(entry):
            rows.append({
                "name": f"tables:{key}:{check.name}",
                "status": "pass" if check.ok else "fail",
                "detail": check.detail,
            })
    return rows


def _lemma_rows(max_order: int | None) -> list[dict]:
    rows = []
    for entry_id, params in cat.CORPUS:
        key = cat.entry_key(entry_id, params)
        expected = cat.expectations_table().get(key)
        if (max_order is not None and expected is not None
                and expected["order"] > max_order):
            rows.append({"name": f"lemmas:{key}", "status": "skipped",
                         "detail": f"order {expected['order']} exceeds "
                                   f"--max-order {max_order}"})
            continue
        entry = cat.build(entry_id, **params)
        witness = entry.classification.dihedral
        if witness is None:
            rows.append({"name": f"lemmas:{key}", "status": "not-applicable",
                         "detail": "no regular dihedral subgroup"})
            continue
        if is_primitive(entry.group):
            rows.append({"name": f"lemmas:{key}", "status": "not-applicable",
                         "detail": "primitive group, no block systems"})
            continue
        systems = minimal_block_systems(entry.group)
        for index, system in enumerate(systems):
            for check in lemma_suite(entry.group, witness, system):
                rows.append({
                    "name": f"lemmas:{key}:system{index}:{check.name}",
                    "status": check.status,
                    "detail": check.details,
                })
    return rows


def _cmd_verify(args) -> int:
    rows: list[dict] = []
    if args.suite in ("tables", "all"):
        rows.extend(_tables_rows(args.max_order))
    if args.suite in ("lemmas", "all"):
        rows.extend(_lemma_rows(args.max_order))
    counts: dict[str, int] = {}
    for row in rows:
        counts[row["status"]] = counts.get(row["status"], 0) + 1
    payload = {"suite": args.suite, "results": rows, "counts": counts}
    doc = _document(payload, {"command": f"verify --suite {args.suite}"})
    _emit(doc, args.out)
    return EXIT_VERIFY if counts.get("fail", 0) else EXIT_OK


# -- parser and dispatch -----------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dgroups",
        description="regular cyclic and dihedral subgroup analysis for "
                    "finite permutation groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="run the full analysis")
    p_analyze.add_argument("groupfile")
    p_analyze.add_argument("--cap-order", type=int, default=10 ** 6)
    p_analyze.add_argument("--cap-index", type=int, default=10 ** 4)
    p_analyze.add_argument("--require-dgroup", action="store_true")
    p_analyze.add_argument("--timing", action="store_true")
    p_analyze.add_argument("--out")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_catalog = sub.add_parser("catalog", help="list or build example groups")
    mode = p_catalog.add_mutually_exclusive_group(required=True)
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--build", metavar="ID")
    p_catalog.add_argument("--params", metavar="K=V,...")
    p_catalog.add_argument("--dir", default=".",
                           help="directory for built group files")
    p_catalog.add_argument("--cap-order", type=int, default=10 ** 6)
    p_catalog.add_argument("--out")
    p_catalog.set_defaults(func=_cmd_catalog)

    p_graph = sub.add_parser("graph", help="inspect orbital graphs")
    p_graph.add_argument("groupfile")
    which = p_graph.add_mutually_exclusive_group(required=True)
    which.add_argument("--pair", metavar="A,B")
    which.add_argument("--all-suborbits", action="store_true")
    p_graph.add_argument("--dot", metavar="FILE",
                         help="write the graph in DOT format (--pair only)")
    p_graph.add_argument("--out")
    p_graph.set_defaults(func=_cmd_graph)

    p_verify = sub.add_parser("verify", help="re-run the check suites")
    p_verify.add_argument("--suite", choices=("lemmas", "tables", "all"),
                          default="all")
    p_verify.add_argument("--max-order", type=int, default=None)
    p_verify.add_argument("--out")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "dot", None) and not getattr(args, "pair", None):
        print("--dot needs --pair", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (GroupFileError, ParseError, OSError) as exc:
        print(f"group file error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except cat.BadParams as exc:
        print(f"bad parameters: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OrderExceedsCap, IndexExceedsCap) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (IntransitiveGroup, DiagonalArc, OddDegree, UnsupportedOrder) as exc:
        print(f"unsupported input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotDGroup as exc:
        print(f"requirement not met: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
