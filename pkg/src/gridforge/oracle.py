"""
Brute-force ground truth for small grids.

Nothing here reuses the winding-matrix code: winding numbers are obtained by
summing turning angles of the knot polygon around each point.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from .grid import GridError, GridState, MarkerList, VertList, rev, to_vertlist

MAX_ORACLE_SIZE = 8
WITNESS_CAP = 64


@dataclass(frozen=True)
class OracleReport:
    n: int
    max_winding: int
    argmax_count: int
    perfect_count: int
    bound: int
    witness_states: tuple[GridState, ...] = field(default=())
    perfect_states: tuple[GridState, ...] = field(default=())


def enumerate_states(m: Sequence[Sequence[int]]) -> OracleReport:
    """Score all n! grid states of ``m`` by their winding value."""
    n = len(m)
    if n > MAX_ORACLE_SIZE:
        raise GridError(f"oracle is capped at n = {MAX_ORACLE_SIZE}, got {n}")
    rows = [min(r) for r in m]
    cols = [min(m[i][j] for i in range(n)) for j in range(n)]
    bound = min(-sum(rows), -sum(cols))
    best = None
    argmax: list[GridState] = []
    argmax_count = 0
    perfect: list[GridState] = []
    for p in permutations(range(n)):
        val = -sum(m[p[i]][i] for i in range(n))
        state = tuple(r + 1 for r in p)
        if val == bound:
            perfect.append(state)
        if best is None or val > best:
            best, argmax, argmax_count = val, [state], 1
        elif val == best:
            argmax_count += 1
            if len(argmax) < WITNESS_CAP:
                argmax.append(state)
    return OracleReport(
        n, best, argmax_count, len(perfect), bound, tuple(argmax), tuple(perfect[:WITNESS_CAP])
    )


def knot_polygon(v: VertList) -> list[tuple[float, float]]:
    """Corners of the knot projection in (x, y) with y pointing up; markers sit at cell centres."""
    n = len(v)
    by_tail = {t: c for c, (t, _) in enumerate(v, 1)}
    pts = []
    c = 1
    for _ in range(n):
        t, h = v[c - 1]
        pts.append((c + 0.5, -(t + 0.5)))
        pts.append((c + 0.5, -(h + 0.5)))
        c = by_tail[h]
    return pts


def winding_number(poly: Sequence[tuple[float, float]], x: float, y: float) -> int:
    total = 0.0
    k = len(poly)
    for a in range(k):
        x0, y0 = poly[a]
        x1, y1 = poly[(a + 1) % k]
        a0 = math.atan2(y0 - y, x0 - x)
        a1 = math.atan2(y1 - y, x1 - x)
        d = a1 - a0
        if d > math.pi:
            d -= 2 * math.pi
        elif d < -math.pi:
            d += 2 * math.pi
        total += d
    return round(total / (2 * math.pi))


def lattice_winding(v: VertList, line_row: int, line_col: int) -> int:
    """Winding number at the crossing of horizontal line ``line_row`` and vertical line ``line_col``."""
    return winding_number(knot_polygon(v), float(line_col), -float(line_row))


def brute_alexander(v: VertList, x: GridState) -> int:
    poly = knot_polygon(v)
    n = len(v)

    def w(i, j):
        return winding_number(poly, float(j), -float(i))

    state_part = -sum(w(r, c) for c, r in enumerate(x, 1))
    corners = 0
    for c, seg in enumerate(v, 1):
        for r in seg:
            corners += w(r, c) + w(r, c + 1) + w(r + 1, c) + w(r + 1, c + 1)
    # A = state_part + corners/8 - (n-1)/2, kept exact
    num = 8 * state_part + corners - 4 * (n - 1)
    if num % 8:
        raise ArithmeticError(f"non-integral Alexander grading {num}/8")
    return num // 8


def random_vertlist(rng: random.Random, n: int) -> VertList:
    """A uniformly oriented random knot diagram of size ``n``.

    Each column gets two distinct rows (two random permutations zipped, so every
    row is used twice), the curve is oriented by traversal and links are
    resampled. Orientation is then reversed with probability 1/2.
    """
    if n < 2:
        raise GridError(f"grid size must be at least 2, got {n}")
    rows = list(range(1, n + 1))
    while True:
        p = rng.sample(rows, n)
        q = rng.sample(rows, n)
        if any(a == b for a, b in zip(p, q)):
            continue
        marks = tuple((c, r) for c in range(1, n + 1) for r in (p[c - 1], q[c - 1]))
        try:
            v = to_vertlist(MarkerList(n, marks))
        except GridError:
            continue
        return rev(v) if rng.random() < 0.5 else v
