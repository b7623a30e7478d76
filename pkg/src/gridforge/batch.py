"""
Knot-level parallel batch runs with an append-only JSONL result file.

Each knot runs the commutation search and, failing that, the one-stabilization
search. A found diagram whose Alexander grading differs from the table genus
is impossible for a correct implementation and aborts the run.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional, Sequence

from .dataset import KnotRecord
from .grid import ConsistencyError, format_pairs, to_vertlist
from .search import NICE_FOUND, SearchLimits, search, verify_witness

log = logging.getLogger(__name__)

RESULT_FIELDS = (
    "knot",
    "status",
    "grid_size",
    "stabilizations",
    "vertlist",
    "state",
    "alexander",
    "genus_match",
    "nodes_explored",
    "seconds",
)


class GenusMismatch(ConsistencyError):
    pass


@dataclass
class BatchSummary:
    total: int = 0
    new_searches: int = 0
    counts: dict = field(default_factory=dict)
    genus_mismatches: int = 0

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "new_searches": self.new_searches,
            "counts": dict(sorted(self.counts.items())),
            "genus_mismatches": self.genus_mismatches,
        }


def solve_record(record: KnotRecord, limits: SearchLimits, stabilize: int = 1) -> dict:
    """Run the search pipeline for one knot and return its JSONL row."""
    start = to_vertlist(record.grid_notation)
    out = search(start, limits, stabilize)
    row = {
        "knot": record.name,
        "status": out.status,
        "grid_size": len(start),
        "stabilizations": None,
        "vertlist": None,
        "state": None,
        "alexander": None,
        "genus_match": None,
        "nodes_explored": out.stats.nodes_explored,
        "seconds": round(out.stats.elapsed_seconds, 3),
    }
    if out.status == NICE_FOUND:
        w = out.witness
        verify_witness(w)
        row.update(
            grid_size=len(w.vertlist),
            stabilizations=w.stabilizations,
            vertlist=format_pairs(w.vertlist),
            state=list(w.state),
            alexander=w.alexander,
            genus_match=w.alexander == record.genus,
        )
    return row


def _solve_args(args):
    return solve_record(*args)


def read_results(path: str | Path) -> dict[str, dict]:
    """Complete rows already in ``path`` keyed by knot; a torn last line is ignored."""
    done: dict[str, dict] = {}
    p = Path(path)
    if not p.exists():
        return done
    with open(p, encoding="utf-8") as fh:
        for line in fh:
            if not line.endswith("\n"):
                break
            try:
                row = json.loads(line)
            except json.JSONDecodeError:
                log.warning("skipping unreadable line in %s", p)
                continue
            done[row["knot"]] = row
    return done


def dump_row(row: dict) -> str:
    return json.dumps({k: row[k] for k in RESULT_FIELDS}, separators=(",", ":")) + "\n"


def _truncate_torn_tail(path: Path) -> None:
    if not path.exists() or path.stat().st_size == 0:
        return
    with open(path, "rb+") as fh:
        data = fh.read()
        if data.endswith(b"\n"):
            return
        fh.truncate(data.rfind(b"\n") + 1)


def batch_run(
    records: Sequence[KnotRecord],
    limits: SearchLimits,
    jobs: int,
    output: str | Path,
    stabilize: int = 1,
) -> BatchSummary:
    output = Path(output)
    _truncate_torn_tail(output)
    existing = read_results(output)
    todo = [r for r in records if r.name not in existing]
    summary = BatchSummary(new_searches=len(todo))
    genus = {r.name: r.genus for r in records}

    def rows() -> Iterator[dict]:
        args = [(r, limits, stabilize) for r in todo]
        if jobs <= 1 or len(todo) <= 1:
            yield from map(_solve_args, args)
            return
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(_solve_args, args)

    mismatch: Optional[dict] = None
    if todo:
        with open(output, "a", encoding="utf-8") as fh:
            for row in rows():
                fh.write(dump_row(row))
                fh.flush()
                existing[row["knot"]] = row
                if row["genus_match"] is False:
                    mismatch = row
                    break

    for r in records:
        row = existing.get(r.name)
        if row is None:
            continue
        summary.total += 1
        summary.counts[row["status"]] = summary.counts.get(row["status"], 0) + 1
        if row["status"] == NICE_FOUND and row["alexander"] != genus[r.name]:
            summary.genus_mismatches += 1
    if mismatch is not None:
        raise GenusMismatch(
            f"{mismatch['knot']}: grading {mismatch['alexander']} but genus {genus[mismatch['knot']]}"
        )
    return summary


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("GRIDFORGE_JOBS", "1")))
    except ValueError:
        return 1
