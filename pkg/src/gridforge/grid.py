"""
Grid diagram notations and conversions.

Three encodings of a knot grid diagram of size n are supported:

* grid-notation: 2n (column, row) marker positions, orientation unspecified;
* vertlist: entry i is the oriented vertical segment (tail_row, head_row)
  in column i;
* horzlist: entry j is the oriented horizontal segment (tail_col, head_col)
  in row j.

Rows are numbered top to bottom and columns left to right, both 1-based.
Vertlists, horzlists and grid states are plain tuples so they hash cheaply
inside the search.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Segment = tuple[int, int]
VertList = tuple[Segment, ...]
HorzList = tuple[Segment, ...]
GridState = tuple[int, ...]


class GridError(ValueError):
    """Invalid grid notation, vertlist, horzlist or grid state."""


class ConsistencyError(RuntimeError):
    """An internal invariant was violated; this indicates a bug."""


@dataclass(frozen=True)
class MarkerList:
    size: int
    markers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        _check_markers(self.size, self.markers)

    def columns(self) -> list[list[int]]:
        """Rows occupied in each column, index 0 = column 1."""
        cols: list[list[int]] = [[] for _ in range(self.size)]
        for c, r in self.markers:
            cols[c - 1].append(r)
        return cols


def _check_markers(n: int, markers: Sequence[tuple[int, int]]) -> None:
    if n < 2:
        raise GridError(f"grid size must be at least 2, got {n}")
    if len(markers) != 2 * n:
        raise GridError(f"expected {2 * n} markers for size {n}, got {len(markers)}")
    if len(set(markers)) != len(markers):
        raise GridError("duplicate marker cell")
    col_count = [0] * (n + 1)
    row_count = [0] * (n + 1)
    for c, r in markers:
        if not (1 <= c <= n and 1 <= r <= n):
            raise GridError(f"marker ({c},{r}) outside 1..{n}")
        col_count[c] += 1
        row_count[r] += 1
    for k in range(1, n + 1):
        if col_count[k] != 2:
            raise GridError(f"column {k} holds {col_count[k]} markers, expected 2")
        if row_count[k] != 2:
            raise GridError(f"row {k} holds {row_count[k]} markers, expected 2")


_PAIR = re.compile(r"[(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*[)\]]")


def _literal_pairs(text: str) -> list[tuple[int, int]]:
    """Integer pairs in round or square brackets; separators may be commas,
    whitespace or nothing, and an optional outer bracket is allowed."""
    pairs = [(int(a), int(b)) for a, b in _PAIR.findall(text)]
    rest = _PAIR.sub(" ", text).strip()
    if rest[:1] in "([" and rest[-1:] in ")]":
        rest = rest[1:-1]
    if rest.replace(",", " ").strip():
        raise GridError(f"malformed notation: {text!r}")
    return pairs


def parse_grid_notation(text: str, row_flip: bool = False) -> MarkerList:
    """Parse ``"(1,1),(1,3),..."`` or ``"[[1,1],[1,3],...]"`` into a MarkerList.

    Pairs are read as (column, row). With ``row_flip`` every row index r is
    replaced by n + 1 - r.
    """
    pairs = _literal_pairs(text)
    if len(pairs) % 2:
        raise GridError(f"odd number of marker pairs ({len(pairs)})")
    n = len(pairs) // 2
    if row_flip:
        pairs = [(c, n + 1 - r) for c, r in pairs]
    return MarkerList(n, tuple(pairs))


def parse_vertlist(text: str) -> VertList:
    v = tuple(_literal_pairs(text))
    validate_vertlist(v)
    return v


def format_pairs(pairs: Iterable[Segment]) -> str:
    return ",".join(f"({a},{b})" for a, b in pairs)


def validate_vertlist(v: Sequence[Segment]) -> None:
    """Raise GridError unless ``v`` describes a single closed oriented curve."""
    n = len(v)
    if n < 2:
        raise GridError(f"grid size must be at least 2, got {n}")
    tails = [0] * (n + 1)
    heads = [0] * (n + 1)
    for i, seg in enumerate(v, 1):
        if len(seg) != 2:
            raise GridError(f"segment {i} is not a pair")
        t, h = seg
        if not (1 <= t <= n and 1 <= h <= n):
            raise GridError(f"segment {i} = {seg} outside 1..{n}")
        if t == h:
            raise GridError(f"segment {i} has equal endpoints")
        tails[t] += 1
        heads[h] += 1
    for r in range(1, n + 1):
        if tails[r] != 1 or heads[r] != 1:
            raise GridError(f"row {r} must be one tail and one head")
    if len(components(v)) != 1:
        raise GridError("diagram is a link with several components")


def components(v: Sequence[Segment]) -> list[list[int]]:
    """Partition column indices (1-based) into the closed curves they trace."""
    n = len(v)
    by_tail = {t: i for i, (t, _) in enumerate(v, 1)}
    seen = [False] * (n + 1)
    comps = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        comp = []
        c = start
        while not seen[c]:
            seen[c] = True
            comp.append(c)
            c = by_tail[v[c - 1][1]]
        comps.append(comp)
    return comps


def to_vertlist(m: MarkerList) -> VertList:
    """Orient a MarkerList into a vertlist.

    The traversal starts in column 1, whose segment is oriented upward (tail
    at its lower marker); every other orientation follows from the curve.
    """
    n = m.size
    cols = m.columns()
    row_cols: list[list[int]] = [[] for _ in range(n + 1)]
    for c, r in m.markers:
        row_cols[r].append(c)
    segs: list[Segment | None] = [None] * n
    col = 1
    tail = max(cols[0])
    for _ in range(n):
        rows = cols[col - 1]
        head = rows[0] if rows[1] == tail else rows[1]
        if segs[col - 1] is not None:
            break
        segs[col - 1] = (tail, head)
        a, b = row_cols[head]
        col = b if a == col else a
        tail = head
    if any(s is None for s in segs):
        raise GridError("grid notation describes a link, not a knot")
    return tuple(segs)  # type: ignore[arg-type]


def to_markers(v: VertList) -> MarkerList:
    """Forget orientation."""
    return MarkerList(len(v), tuple(sorted((i, r) for i, seg in enumerate(v, 1) for r in seg)))


def rev(v: VertList) -> VertList:
    return tuple((h, t) for t, h in v)


def v_to_h(v: VertList) -> HorzList:
    n = len(v)
    ends_in = [0] * (n + 1)
    starts_in = [0] * (n + 1)
    for i, (t, h) in enumerate(v, 1):
        starts_in[t] = i
        ends_in[h] = i
    return tuple((ends_in[j], starts_in[j]) for j in range(1, n + 1))


def h_to_v(hz: HorzList) -> VertList:
    n = len(hz)
    tail_row = [0] * (n + 1)
    head_row = [0] * (n + 1)
    for j, (a, b) in enumerate(hz, 1):
        # the horizontal segment in row j arrives at column b, where the
        # vertical segment starts, and leaves column a, where one ends
        tail_row[b] = j
        head_row[a] = j
    return tuple((tail_row[i], head_row[i]) for i in range(1, n + 1))


def validate_state(x: Sequence[int], n: int) -> None:
    if len(x) != n or sorted(x) != list(range(1, n + 1)):
        raise GridError(f"{tuple(x)} is not a permutation of 1..{n}")
