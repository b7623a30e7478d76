"""Command line entry point: ``gridforge {check,search,batch,oracle,render}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .batch import GenusMismatch, batch_run, default_jobs, solve_record
from .dataset import IngestConfig, IngestError, bundled_path, find_knot, ingest_csv
from .detect import Status, detect_unique_perfect
from .grid import ConsistencyError, GridError, format_pairs, parse_grid_notation, parse_vertlist, to_vertlist
from .oracle import enumerate_states
from .render import format_matrix, render
from .search import NICE_FOUND, SearchLimits
from .winding import alexander_constant, w_matrix, winding_value

EXIT_OK, EXIT_NOT_FOUND, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _diagram(args) -> "tuple":
    if getattr(args, "vertlist", None):
        return parse_vertlist(args.vertlist)
    if getattr(args, "grid", None):
        return to_vertlist(parse_grid_notation(args.grid, row_flip=args.row_flip))
    raise GridError("give --vertlist or --grid")


def _add_diagram_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--vertlist", help='oriented vertical segments, e.g. "(3,1),(4,2),(5,3),(1,4),(2,5)"')
    g.add_argument("--grid", help="grid-notation marker list")
    p.add_argument("--row-flip", action="store_true", help="read grid-notation rows bottom to top")


def _add_limit_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=10**6)
    p.add_argument("--max-seconds", type=float, default=600.0)
    p.add_argument("--max-queue", type=int, default=5 * 10**6)
    p.add_argument("--stabilize", type=int, choices=(0, 1), default=1)


def _add_db_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--db", default=None, help="knot table CSV (.csv or .csv.gz); default: bundled <=9 crossings")
    p.add_argument("--name-column", default="name")
    p.add_argument("--grid-column", default="grid_notation")
    p.add_argument("--genus-column", default="seifert_genus")
    p.add_argument("--fibered-column", default="fibered")
    p.add_argument("--db-row-flip", action="store_true")


def _limits(args) -> SearchLimits:
    return SearchLimits(args.max_nodes, args.max_seconds, args.max_queue)


def _records(args):
    cfg = IngestConfig(args.name_column, args.grid_column, args.genus_column, args.fibered_column, args.db_row_flip)
    return ingest_csv(args.db or bundled_path(), cfg)


def cmd_check(args) -> int:
    v = _diagram(args)
    m = w_matrix(v)
    rep = detect_unique_perfect(m)
    print(f"vertlist: {format_pairs(v)}")
    print(f"row number: {rep.row_number}")
    print(f"column number: {rep.col_number}")
    print(f"status: {rep.status.value} (axis {rep.axis.value}, {rep.min_detections} minimum scans)")
    if args.matrix:
        print(format_matrix(m))
    if rep.status is Status.UNIQUE:
        alex = winding_value(m, rep.state) + alexander_constant(v)
        print(f"state: {','.join(map(str, rep.state))}")
        print(f"alexander: {alex}")
    return EXIT_OK


def cmd_search(args) -> int:
    if args.knot:
        records = _records(args)
        try:
            record = find_knot(records, args.knot)
        except KeyError:
            print(f"knot {args.knot} not found among fibered knots of the table", file=sys.stderr)
            return EXIT_USAGE
    else:
        from .dataset import KnotRecord
        from .grid import to_markers

        v = _diagram(args)
        record = KnotRecord("<input>", to_markers(v), -1, True)
    row = solve_record(record, _limits(args), args.stabilize)
    if not args.knot:
        row["genus_match"] = None
    print(json.dumps(row))
    if args.out:
        from .batch import dump_row

        with open(args.out, "a", encoding="utf-8") as fh:
            fh.write(dump_row(row))
    if row["genus_match"] is False:
        print(f"genus mismatch for {record.name}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK if row["status"] == NICE_FOUND else EXIT_NOT_FOUND


def cmd_batch(args) -> int:
    records = _records(args)
    if args.max_crossings is not None:
        records = [r for r in records if _crossings(r.name) <= args.max_crossings]
    summary = batch_run(records, _limits(args), args.jobs, args.out, args.stabilize)
    print(json.dumps(summary.as_dict()))
    return EXIT_OK if summary.counts.get(NICE_FOUND, 0) == summary.total else EXIT_NOT_FOUND


def _crossings(name: str) -> int:
    head = name.split("_")[0]
    digits = "".join(ch for ch in head if ch.isdigit())
    return int(digits) if digits else 0


def cmd_oracle(args) -> int:
    v = _diagram(args)
    rep = enumerate_states(w_matrix(v))
    const = alexander_constant(v)
    print(f"max winding value: {rep.max_winding} (Alexander {rep.max_winding + const})")
    print(f"bound min(r, c): {rep.bound}")
    print(f"maximizers: {rep.argmax_count}")
    print(f"perfect states: {rep.perfect_count}")
    for s in rep.witness_states[: args.show]:
        print("  " + ",".join(map(str, s)))
    return EXIT_OK


def cmd_render(args) -> int:
    v = _diagram(args)
    state = None
    if args.state:
        state = tuple(int(x) for x in args.state.replace("(", "").replace(")", "").split(","))
        if sorted(state) != list(range(1, len(v) + 1)):
            raise GridError(f"state {state} is not a permutation of 1..{len(v)}")
    sys.stdout.write(render(v, state, args.format, args.winding))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridforge", description="Search for nice grid diagrams of fibered knots.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="row/column numbers and unique-perfect detection for one diagram")
    _add_diagram_args(p)
    p.add_argument("--matrix", action="store_true", help="also print the winding matrix")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="BFS for a nice diagram of one knot")
    _add_diagram_args(p)
    p.add_argument("--knot", help="knot name in the table, e.g. 3_1")
    _add_db_args(p)
    _add_limit_args(p)
    p.add_argument("--out", help="append the JSONL row to this file")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("batch", help="search every fibered knot of a table, resumable JSONL output")
    _add_db_args(p)
    _add_limit_args(p)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--max-crossings", type=int, default=None)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("oracle", help="exhaustive grid state enumeration (n <= 8)")
    _add_diagram_args(p)
    p.add_argument("--show", type=int, default=10, help="maximizers to list")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="ASCII or SVG picture")
    _add_diagram_args(p)
    p.add_argument("--state", help="grid state as a permutation, e.g. 1,2,3,4,5")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--winding", action="store_true", help="overlay winding numbers (svg)")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (GenusMismatch, ConsistencyError) as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (GridError, IngestError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
