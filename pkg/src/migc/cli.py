"""Command line front end: tree building, the three benchmarks, and the service.

Validation failures exit 1 with a one-line ``code=NAME`` diagnostic on
stderr; infeasible instances exit 2. Every run prints its resolved seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coders import CODER_NAMES, build_with_coder
from .errors import ImpossibleFleet, InfeasibleQuerySet, MigcError
from .model import (
    QuerySet,
    query_set_from_json,
    query_set_to_json,
    tree_to_dot,
    tree_to_json,
    validate_distribution,
)
from .partition import SearchBudget
from .scenarios.battleship import (
    BattleshipConfig,
    battleship_bench,
    write_battleship_csv,
    write_traces_csv,
)
from .scenarios.coding import BenchConfig, bench_fig5, write_fig5_csv, write_gaps_csv
from .scenarios.dna import dna_bench, write_dna_csv


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would sys.exit(2)
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="migc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="build a decision tree and report")
    build.add_argument("--dist", required=True, help="distribution JSON file")
    build.add_argument("--queries", required=True, help="query set JSON file")
    build.add_argument("--coder", required=True, choices=CODER_NAMES)
    build.add_argument("--out", required=True, help="tree JSON output ('-' = stdout)")
    build.add_argument("--dot", help="also write the tree as DOT graph text")
    build.add_argument("--format", choices=("json", "csv"), default="json",
                       help="report rendering")
    build.add_argument("--allow-zero", action="store_true",
                       help="drop zero-mass symbols instead of rejecting them")
    build.add_argument("--seed", type=int, default=0)
    build.add_argument("--exact-state-limit", type=int, default=1 << 24)
    build.add_argument("--search-mode", choices=("auto", "exact", "heuristic"),
                       default="auto")

    coding = sub.add_parser("bench-coding", help="random-distribution coding benchmark")
    coding.add_argument("--d", type=int, default=3)
    coding.add_argument("--n-min", type=int, default=3)
    coding.add_argument("--n-max", type=int, default=12)
    coding.add_argument("--samples", type=int, default=1000)
    coding.add_argument("--seed", type=int, default=0)
    coding.add_argument("--out-dir", default=".")

    dna = sub.add_parser("bench-dna", help="two-gene interval detection benchmark")
    dna.add_argument("--exons", type=int, default=6)
    dna.add_argument("--samples", type=int, default=1000)
    dna.add_argument("--seed", type=int, default=0)
    dna.add_argument("--out-dir", default=".")

    ship = sub.add_parser("bench-battleship", help="entropy-guided battleship benchmark")
    ship.add_argument("--games", type=int, default=100)
    ship.add_argument("--layouts", type=int, default=3**12)
    ship.add_argument("--stop", choices=("identify", "sink"), default="identify")
    ship.add_argument("--seed", type=int, default=0)
    ship.add_argument("--out-dir", default=".")

    serve = sub.add_parser("serve", help="run the HTTP session service")
    serve.add_argument("--port", type=int, default=8080)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--seed", type=int, default=0)
    return parser


def _load_json(path: str) -> dict:
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def _drop_zero_symbols(dist_data: dict, qset_data: dict) -> tuple[dict, dict]:
    """Remove zero-mass symbols and remap query cell indices accordingly."""
    keep = [i for i, p in enumerate(dist_data["probs"]) if float(p) != 0.0]
    remap = {old: new for new, old in enumerate(keep)}
    dist_out = {
        "labels": [dist_data["labels"][i] for i in keep],
        "probs": [dist_data["probs"][i] for i in keep],
    }
    qset_out = dict(qset_data)
    qset_out["queries"] = [
        {
            "id": q["id"],
            "cells": [[remap[i] for i in cell if i in remap] for cell in q["cells"]],
        }
        for q in qset_data.get("queries", ())
    ]
    return dist_out, qset_out


def _report_json(report) -> dict:
    out = {
        "per_symbol_lengths": list(report.per_symbol_lengths),
        "expected_length": report.expected_length,
        "entropy_base_d": report.entropy_base_d,
    }
    if report.codewords is not None:
        out["codewords"] = list(report.codewords)
    return out


def _report_csv(report, labels) -> str:
    lines = ["symbol,label,length"]
    for i, (label, length) in enumerate(zip(labels, report.per_symbol_lengths)):
        lines.append(f"{i},{label},{length}")
    lines.append(f"expected_length,,{report.expected_length!r}")
    return "\n".join(lines) + "\n"


def _cmd_build(args) -> int:
    dist_data = _load_json(args.dist)
    qset_data = _load_json(args.queries)
    if args.allow_zero:
        dist_data, qset_data = _drop_zero_symbols(dist_data, qset_data)
    dist = validate_distribution(dist_data["labels"], dist_data["probs"])
    qset = query_set_from_json(qset_data, dist.n)
    budget = SearchBudget(args.exact_state_limit, args.search_mode)
    report, tree, virtual = build_with_coder(args.coder, dist, qset, budget)

    tree_doc = json.dumps(tree_to_json(tree), sort_keys=True)
    if args.out == "-":
        sys.stdout.write(tree_doc + "\n")
        print(json.dumps(_report_json(report), sort_keys=True), file=sys.stderr)
    else:
        Path(args.out).write_text(tree_doc + "\n", encoding="utf-8")
        if virtual:
            # Unconstrained coders invent their own queries; persist them in the
            # documented query-set schema so the tree file stays interpretable.
            sidecar = Path(args.out).with_suffix(".queries.json")
            sidecar.write_text(
                json.dumps(
                    query_set_to_json(QuerySet(qset.d, qset.n_symbols, tree.queries)),
                    sort_keys=True,
                )
                + "\n",
                encoding="utf-8",
            )
        if args.format == "csv":
            sys.stdout.write(_report_csv(report, dist.labels))
        else:
            sys.stdout.write(json.dumps(_report_json(report), sort_keys=True) + "\n")
    if args.dot:
        Path(args.dot).write_text(tree_to_dot(tree, dist), encoding="utf-8")
    return 0


def _cmd_bench_coding(args) -> int:
    config = BenchConfig(args.n_min, args.n_max, args.samples, args.d, args.seed)
    result = bench_fig5(config)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "fig5.csv", "w", encoding="utf-8", newline="") as handle:
        write_fig5_csv(result, handle)
    with open(out_dir / "gaps.csv", "w", encoding="utf-8", newline="") as handle:
        write_gaps_csv(result, handle)
    print(f"wrote {out_dir / 'fig5.csv'} and {out_dir / 'gaps.csv'}", file=sys.stderr)
    return 0


def _cmd_bench_dna(args) -> int:
    result = dna_bench(args.exons, args.samples, args.seed)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "dna.csv", "w", encoding="utf-8", newline="") as handle:
        write_dna_csv(result, handle)
    print(f"wrote {out_dir / 'dna.csv'}", file=sys.stderr)
    return 0


def _cmd_bench_battleship(args) -> int:
    config = BattleshipConfig(
        layout_count=args.layouts, stop_rule=args.stop, seed=args.seed
    )
    result = battleship_bench(config, args.games)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "battleship.csv", "w", encoding="utf-8", newline="") as handle:
        write_battleship_csv(result, handle)
    with open(out_dir / "traces.csv", "w", encoding="utf-8", newline="") as handle:
        write_traces_csv(result, handle)
    print(
        f"wrote {out_dir / 'battleship.csv'} and {out_dir / 'traces.csv'}",
        file=sys.stderr,
    )
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "build": _cmd_build,
    "bench-coding": _cmd_bench_coding,
    "bench-dna": _cmd_bench_dna,
    "bench-battleship": _cmd_bench_battleship,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: code=UsageError {exc}", file=sys.stderr)
        return 1
    print(f"seed={getattr(args, 'seed', 0)}", file=sys.stderr)
    try:
        return _COMMANDS[args.command](args)
    except (InfeasibleQuerySet, ImpossibleFleet) as exc:
        print(f"error: code={exc.code} {exc}", file=sys.stderr)
        return 2
    except MigcError as exc:
        print(f"error: code={exc.code} {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: code={type(exc).__name__} {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
