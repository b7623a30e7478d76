"""Knot table ingestion from CSV exports (plain or gzip)."""

from __future__ import annotations

import csv
import gzip
import io
import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .grid import GridError, MarkerList, parse_grid_notation

log = logging.getLogger(__name__)

_TRUE = {"y", "yes", "true", "t", "1"}
_FALSE = {"n", "no", "false", "f", "0"}


class IngestError(ValueError):
    pass


@dataclass(frozen=True)
class IngestConfig:
    name_column: str = "name"
    grid_column: str = "grid_notation"
    genus_column: str = "seifert_genus"
    fibered_column: str = "fibered"
    row_flip: bool = False

    def __post_init__(self):
        for col in (self.name_column, self.grid_column, self.genus_column, self.fibered_column):
            if not col:
                raise ValueError("column names must be non-empty")


@dataclass(frozen=True)
class KnotRecord:
    name: str
    grid_notation: MarkerList
    genus: int
    fibered: bool


@dataclass(frozen=True)
class RowFailure:
    line: int
    name: str
    reason: str


def bundled_path(name: str = "knots_le9.csv") -> Path:
    return Path(str(resources.files("gridforge") / "data" / name))


def _open_text(path: Path):
    if str(path).endswith(".gz"):
        return io.TextIOWrapper(gzip.open(path, "rb"), encoding="utf-8", newline="")
    return open(path, encoding="utf-8", newline="")


def _parse_bool(text: str) -> bool:
    t = text.strip().lower()
    if t in _TRUE:
        return True
    if t in _FALSE:
        return False
    raise ValueError(f"not a boolean: {text!r}")


def ingest_csv(
    path: str | Path,
    config: IngestConfig = IngestConfig(),
    failures: Optional[list[RowFailure]] = None,
) -> list[KnotRecord]:
    """Read fibered knots from a CSV table.

    Rows that fail to parse are logged (and appended to ``failures`` if
    given) without stopping the rest of the file; non-fibered rows are
    dropped silently.
    """
    path = Path(path)
    records: list[KnotRecord] = []
    with _open_text(path) as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        wanted = [config.name_column, config.grid_column, config.genus_column, config.fibered_column]
        missing = [c for c in wanted if c not in header]
        if missing:
            raise IngestError(f"{path}: missing columns {missing}; found {header}")
        for line, row in enumerate(reader, 2):
            name = (row[config.name_column] or "").strip()
            try:
                fibered = _parse_bool(row[config.fibered_column] or "")
                if not fibered:
                    continue
                genus = int(row[config.genus_column])
                if genus < 0:
                    raise ValueError(f"negative genus {genus}")
                markers = parse_grid_notation(row[config.grid_column] or "", row_flip=config.row_flip)
            except (ValueError, GridError) as exc:
                log.warning("%s line %d (%s): %s", path, line, name, exc)
                if failures is not None:
                    failures.append(RowFailure(line, name, str(exc)))
                continue
            records.append(KnotRecord(name, markers, genus, True))
    if not records:
        raise IngestError(f"{path}: no valid fibered knot rows")
    return records


def find_knot(records: list[KnotRecord], name: str) -> KnotRecord:
    for r in records:
        if r.name == name:
            return r
    raise KeyError(name)
