"""
Winding matrices and the Alexander grading.

Lattice point (i, j) is the crossing of horizontal line i with vertical line
j of the planar realization given by a vertlist; line 1 is the top / left
boundary. Winding numbers are read off a ray running west from the point:
a vertical strand to the west that runs downward counts +1 (the curve passes
the point counterclockwise), upward counts -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .grid import ConsistencyError, GridState, VertList

WindingMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BoundPair:
    row_number: int
    col_number: int

    @property
    def bound(self) -> int:
        return min(self.row_number, self.col_number)


def planar_winding(v: VertList) -> list[list[int]]:
    """(n+1) x (n+1) winding numbers including the outer boundary lines."""
    n = len(v)
    delta = [[0] * (n + 1) for _ in range(n + 1)]
    for k, (t, h) in enumerate(v):
        s = 1 if h > t else -1
        lo, hi = (t, h) if t < h else (h, t)
        # segment in column k+1 crosses horizontal lines lo+1..hi; it lies
        # west of vertical lines k+2 and beyond
        for i in range(lo, hi):
            delta[i][k + 1] += s
    for row in delta:
        acc = 0
        for j in range(n + 1):
            acc += row[j]
            row[j] = acc
    return delta


def w_matrix(v: VertList) -> WindingMatrix:
    n = len(v)
    full = planar_winding(v)
    return tuple(tuple(full[i][:n]) for i in range(n))


def bounds(m: Sequence[Sequence[int]]) -> BoundPair:
    n = len(m)
    r = -sum(min(row) for row in m)
    c = -sum(min(m[i][j] for i in range(n)) for j in range(n))
    return BoundPair(r, c)


def winding_value(m: Sequence[Sequence[int]], x: GridState) -> int:
    """The winding function: minus the sum of the entries picked by ``x``."""
    return -sum(m[r - 1][i] for i, r in enumerate(x))


def corner_sum(v: VertList) -> int:
    """Sum of winding numbers over the four corners of all 2n marked cells."""
    full = planar_winding(v)
    total = 0
    for c, seg in enumerate(v):
        for r in seg:
            r0 = r - 1
            total += full[r0][c] + full[r0][c + 1] + full[r0 + 1][c] + full[r0 + 1][c + 1]
    return total


def alexander_constant(v: VertList) -> int:
    n = len(v)
    num = corner_sum(v) - 4 * (n - 1)
    if num % 8:
        raise ConsistencyError(f"non-integral Alexander constant {num}/8 for {v}")
    return num // 8


def a_grading(v: VertList, x: GridState) -> int:
    return winding_value(w_matrix(v), x) + alexander_constant(v)
