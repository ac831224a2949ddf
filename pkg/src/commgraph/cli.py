"""Command-line front end.

Subcommands: analyze, paper-verify, search-params, graph-export.  All output
is deterministic (sorted JSON keys, fixed CSV columns) so reruns are
byte-identical for the same inputs.

Exit codes: 0 success, 1 parse error, 2 cap exceeded, 3 the classifier
produced the sentinel verdict DisconnectedOther, 4 a verification
check failed (paper-verify).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .classify import KIND_DISCONNECTED_OTHER, classify_group
from .corpus import load_group_file
from .diameter8 import find_params, first_failing_check, run_all_checks
from .errors import CapExceeded
from .graph import build_graph
from .groups import DEFAULT_GROUP_CAP

CAP_ENV_VAR = "COMMGRAPH_CAP"

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_CAP = 2
EXIT_SENTINEL = 3
EXIT_CHECK_FAILED = 4

ANALYZE_COLUMNS = [
    "file", "kind", "order", "kernel_order", "K_order", "L_order",
    "diameter", "components",
]


@dataclass
class RunConfig:
    command: str
    paths: list = field(default_factory=list)
    q: int = 11
    r: int = 5
    t: int = 3221
    q_max: int = 11
    cap: int = DEFAULT_GROUP_CAP
    out: str | None = None
    fmt: str = "json"
    jobs: int = 1


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_GROUP_CAP


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="commgraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "csv")):
        p.add_argument("--cap", type=int, default=None, help="element cap for materialization")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", dest="fmt", choices=list(formats), default="json")

    p = sub.add_parser("analyze", help="classify group files")
    p.add_argument("files", nargs="+")
    p.add_argument("--jobs", type=int, default=1, help="files analyzed concurrently")
    common(p)

    p = sub.add_parser("paper-verify", help="run the diameter-8 family verification suite")
    p.add_argument("--q", type=int, default=11)
    p.add_argument("--r", type=int, default=5)
    p.add_argument("--t", type=int, default=3221)
    common(p)

    p = sub.add_parser("search-params", help="list valid (q, r, t) parameter triples")
    p.add_argument("--q-max", dest="q_max", type=int, required=True)
    common(p)

    p = sub.add_parser("graph-export", help="export the commuting graph of a group file")
    p.add_argument("files", nargs=1)
    common(p, formats=("json",))
    return parser


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _dump_csv(rows, columns) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([("" if row.get(c) is None else row.get(c)) for c in columns])
    return buf.getvalue()


def _analyze_one(path: str, cap: int) -> dict:
    try:
        handle = load_group_file(path, cap=cap)
        handle.materialize()
    except CapExceeded as exc:
        return {"file": path, "error": str(exc), "error_kind": "cap"}
    except Exception as exc:
        return {"file": path, "error": str(exc), "error_kind": "parse"}
    try:
        verdict = classify_group(handle)
    except CapExceeded as exc:
        return {"file": path, "error": str(exc), "error_kind": "cap"}
    row = {"file": path}
    row.update(verdict.to_json())
    return row


def cmd_analyze(cfg: RunConfig) -> int:
    if cfg.jobs > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(lambda p: _analyze_one(p, cfg.cap), cfg.paths))
    else:
        rows = [_analyze_one(p, cfg.cap) for p in cfg.paths]

    if cfg.fmt == "csv":
        csv_rows = []
        for row in rows:
            if "error" in row:
                csv_rows.append({"file": row["file"], "kind": "Error"})
            else:
                csv_rows.append(row)
        _write(_dump_csv(csv_rows, ANALYZE_COLUMNS), cfg.out)
    else:
        _write(_dump_json(rows), cfg.out)

    for row in rows:
        if row.get("error_kind") == "parse":
            print(f"error: {row['file']}: {row['error']}", file=sys.stderr)
            return EXIT_PARSE
    for row in rows:
        if row.get("error_kind") == "cap":
            print(f"error: {row['file']}: {row['error']}", file=sys.stderr)
            return EXIT_CAP
    for row in rows:
        if row.get("kind") == KIND_DISCONNECTED_OTHER:
            print(f"sentinel verdict DisconnectedOther: {row['file']}", file=sys.stderr)
            return EXIT_SENTINEL
    return EXIT_OK


def cmd_paper_verify(cfg: RunConfig) -> int:
    report = run_all_checks(cfg.q, cfg.r, cfg.t)
    if cfg.fmt == "csv":
        _write(_dump_csv(report["checks"], ["name", "status", "detail"]), cfg.out)
    else:
        _write(_dump_json(report), cfg.out)
    failing = first_failing_check(report)
    if failing:
        print(f"check failed: {failing}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_search_params(cfg: RunConfig) -> int:
    triples = [
        {"q": p.q, "r": p.r, "t": p.t} for p in find_params(cfg.q_max)
    ]
    if cfg.fmt == "csv":
        _write(_dump_csv(triples, ["q", "r", "t"]), cfg.out)
    else:
        _write(_dump_json({"q_max": cfg.q_max, "triples": triples}), cfg.out)
    return EXIT_OK


def cmd_graph_export(cfg: RunConfig) -> int:
    path = cfg.paths[0]
    try:
        handle = load_group_file(path, cap=cfg.cap)
        handle.materialize()
    except CapExceeded as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except Exception as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    graph = build_graph(handle)
    _write(_dump_json(graph.to_json()), cfg.out)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        paths=list(getattr(args, "files", [])),
        q=getattr(args, "q", 11),
        r=getattr(args, "r", 5),
        t=getattr(args, "t", 3221),
        q_max=getattr(args, "q_max", 11),
        cap=args.cap if args.cap is not None else default_cap(),
        out=args.out,
        fmt=args.fmt,
        jobs=getattr(args, "jobs", 1),
    )
    handler = {
        "analyze": cmd_analyze,
        "paper-verify": cmd_paper_verify,
        "search-params": cmd_search_params,
        "graph-export": cmd_graph_export,
    }[cfg.command]
    return handler(cfg)


if __name__ == "__main__":
    sys.exit(main())
