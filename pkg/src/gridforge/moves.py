"""
Grid moves that preserve the knot type.

Commutations swap two cyclically adjacent columns (or rows) whose segments
are disjoint or strictly nested. The X-NW stabilization grows the grid by
one around the X marking of a segment; the head of every oriented segment is
taken to be its X end.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .grid import GridError, VertList, v_to_h


class MoveKind(str, Enum):
    COLUMN_COMMUTE = "column-commute"
    ROW_COMMUTE = "row-commute"
    STABILIZE_X_NW = "stabilize-x-nw"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    index: int


def can_commute(span_a: tuple[int, int], span_b: tuple[int, int]) -> bool:
    """True if the closed intervals are disjoint or one lies strictly inside the other."""
    a0, a1 = sorted(span_a)
    b0, b1 = sorted(span_b)
    if a1 < b0 or b1 < a0:
        return True
    return (a0 < b0 and b1 < a1) or (b0 < a0 and a1 < b1)


def _swap_columns(v: VertList, i: int, j: int) -> VertList:
    out = list(v)
    out[i], out[j] = out[j], out[i]
    return tuple(out)


def _swap_rows(v: VertList, r: int, s: int) -> VertList:
    def f(x):
        return s if x == r else r if x == s else x

    return tuple((f(t), f(h)) for t, h in v)


def iter_commutations(v: VertList) -> Iterator[tuple[Move, VertList]]:
    n = len(v)
    # the pair (n, 1) is adjacent on the torus; shifting it into the
    # interior, swapping and shifting back is the same as swapping in place
    for i in range(n):
        j = (i + 1) % n
        if can_commute(v[i], v[j]):
            yield Move(MoveKind.COLUMN_COMMUTE, i + 1), _swap_columns(v, i, j)
    hz = v_to_h(v)
    for r in range(n):
        s = (r + 1) % n
        if can_commute(hz[r], hz[s]):
            yield Move(MoveKind.ROW_COMMUTE, r + 1), _swap_rows(v, r + 1, s + 1)


def c_move(v: VertList) -> list[tuple[Move, VertList]]:
    """Every diagram one (toroidal) row or column commutation away from ``v``."""
    return list(iter_commutations(v))


def apply_move(v: VertList, move: Move) -> VertList:
    n = len(v)
    if not 1 <= move.index <= n:
        raise GridError(f"move index {move.index} outside 1..{n}")
    i = move.index - 1
    if move.kind is MoveKind.STABILIZE_X_NW:
        return x_nw(v, move.index)
    if move.kind is MoveKind.COLUMN_COMMUTE:
        j = (i + 1) % n
        if not can_commute(v[i], v[j]):
            raise GridError(f"columns {i + 1} and {j + 1} do not commute")
        return _swap_columns(v, i, j)
    hz = v_to_h(v)
    j = (i + 1) % n
    if not can_commute(hz[i], hz[j]):
        raise GridError(f"rows {i + 1} and {j + 1} do not commute")
    return _swap_rows(v, i + 1, j + 1)


def x_nw(v: VertList, i: int) -> VertList:
    """X-NW stabilization at the X end (head) of segment ``i``.

    A new row is inserted just below the head row h and a new column just
    right of column i. The X cell becomes a 2x2 block with X in the NW and
    SE cells and an O in the NE cell; the new column carries the length-one
    segment (h, h + 1).
    """
    n = len(v)
    if not 1 <= i <= n:
        raise GridError(f"segment index {i} outside 1..{n}")
    t, h = v[i - 1]

    def shift(r: int) -> int:
        return r if r < h else r + 1

    out = []
    for k, (tk, hk) in enumerate(v, 1):
        if k == i:
            out.append((shift(t), h))
            out.append((h, h + 1))
        elif tk == h:
            out.append((h + 1, shift(hk)))
        else:
            out.append((shift(tk), shift(hk)))
    return tuple(out)


def destabilize(v: VertList, i: int) -> VertList:
    """Undo ``x_nw(., i)``: column i + 1 must hold (h, h + 1) and column i end at h."""
    n = len(v)
    if not 1 <= i < n:
        raise GridError(f"segment index {i} outside 1..{n - 1}")
    h, h1 = v[i]
    if h1 != h + 1 or v[i - 1][1] != h:
        raise GridError(f"no X-NW stabilization block at segment {i}")

    def unshift(r: int) -> int:
        return r if r <= h else r - 1

    return tuple((unshift(t), unshift(hd)) for k, (t, hd) in enumerate(v) if k != i)


def shift(v: VertList, cols: int, rows: int) -> VertList:
    """Cyclically move the realization: column k + cols becomes column k, row r becomes r + rows."""
    n = len(v)
    return tuple(
        ((v[(k + cols) % n][0] - 1 + rows) % n + 1, (v[(k + cols) % n][1] - 1 + rows) % n + 1)
        for k in range(n)
    )


def canonical_key(v: VertList) -> VertList:
    """Lexicographically least vertlist over all n^2 cyclic shifts of ``v``."""
    n = len(v)
    # the least shift puts a tail in row 1 of column 1 with the shortest
    # cyclic length; only columns reaching that length need a full compare
    lengths = [(h - t) % n for t, h in v]
    best = min(lengths)
    return min(shift(v, a, (1 - v[a][0]) % n) for a in range(n) if lengths[a] == best)
