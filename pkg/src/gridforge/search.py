"""
Breadth-first searches for nice grid diagrams.

A diagram is nice when some planar realization of it has a unique perfect
grid state. Diagrams are deduplicated by their cyclic-shift class
(``canonical_key``); because perfectness depends on where the torus is cut,
each dequeued class is tested in all n^2 of its realizations.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .detect import Status, _column_pass, _row_pass, _transpose, detect_unique_perfect
from .grid import ConsistencyError, GridState, VertList, rev
from .moves import canonical_key, iter_commutations, shift, x_nw
from .winding import alexander_constant, w_matrix, winding_value


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: int = 10**6
    max_seconds: float = 600.0
    max_queue: int = 5 * 10**6

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0 or self.max_queue <= 0:
            raise ValueError("search limits must be positive")


@dataclass(frozen=True)
class Witness:
    vertlist: VertList
    state: GridState
    alexander: int
    stabilizations: int


@dataclass
class SearchStats:
    nodes_explored: int = 0
    duplicates_skipped: int = 0
    elapsed_seconds: float = 0.0
    frontier_peak: int = 0


NICE_FOUND = "nice_found"
EXHAUSTED = "exhausted"
BUDGET_HIT = "budget_hit"


@dataclass
class SearchOutcome:
    status: str
    witness: Optional[Witness] = None
    stats: SearchStats = field(default_factory=SearchStats)

    def to_dict(self) -> dict:
        return asdict(self)


def try_permutations(v: VertList) -> Optional[tuple[GridState, int]]:
    """Unique perfect state of this exact realization and its Alexander grading, if any."""
    m = w_matrix(v)
    rep = detect_unique_perfect(m)
    if rep.status is not Status.UNIQUE:
        return None
    return rep.state, winding_value(m, rep.state) + alexander_constant(v)


def try_realizations(v: VertList) -> Optional[tuple[VertList, GridState, int]]:
    """First realization ``shift(v, a, b)`` (a, b ascending) with a unique perfect state.

    A column shift only adds a constant to each row of the winding matrix,
    and a row shift a constant to each column. So the column pass and
    c + constant depend only on a, the row pass and r + constant only on b,
    and 2n matrices decide all n^2 realizations.
    """
    n = len(v)
    col_bound = []
    col_res = []
    for a in range(n):
        va = shift(v, a, 0)
        m = w_matrix(va)
        cols = _transpose(m)
        mins = [min(c) for c in cols]
        col_bound.append(alexander_constant(va) - sum(mins))
        col_res.append(_column_pass(cols, mins))
    row_bound = []
    row_res = []
    for b in range(n):
        vb = shift(v, 0, b)
        m = w_matrix(vb)
        mins = [min(r) for r in m]
        row_bound.append(alexander_constant(vb) - sum(mins))
        row_res.append(_row_pass(m, mins))
    for a in range(n):
        for b in range(n):
            if col_bound[a] < row_bound[b]:
                ok = col_res[a].status is Status.UNIQUE
            elif row_bound[b] < col_bound[a]:
                ok = row_res[b].status is Status.UNIQUE
            else:
                ok = Status.UNIQUE in (col_res[a].status, row_res[b].status)
            if ok:
                s = shift(v, a, b)
                found = try_permutations(s)
                if found is None:
                    raise ConsistencyError(f"realization ({a},{b}) of {v} predicted nice but is not")
                return s, found[0], found[1]
    return None


def _bfs(
    seeds: Iterable[VertList],
    limits: SearchLimits,
    deadline: float,
    stats: SearchStats,
    test: Callable[[VertList], Optional[tuple[VertList, GridState, int]]],
    closure: Optional[list] = None,
) -> tuple[str, Optional[tuple[VertList, GridState, int]]]:
    """FIFO search over commutations.

    Seeds form level 0 and are consumed lazily before anything in the queue,
    so a large seed set is never materialized.
    """
    seen: set = set()
    queue: deque = deque()
    truncated = False
    explored = 0

    def fresh(v: VertList) -> bool:
        k = canonical_key(v)
        if k in seen:
            stats.duplicates_skipped += 1
            return False
        seen.add(k)
        return True

    def nodes() -> Iterator[VertList]:
        for s in seeds:
            if fresh(s):
                yield s
        while queue:
            yield queue.popleft()

    for v in nodes():
        if explored >= limits.max_nodes or time.monotonic() > deadline:
            return BUDGET_HIT, None
        explored += 1
        stats.nodes_explored += 1
        if closure is not None:
            closure.append(v)
        found = test(v)
        if found is not None:
            return NICE_FOUND, found
        for _, w in iter_commutations(v):
            if not fresh(w):
                continue
            if len(queue) >= limits.max_queue:
                truncated = True
                continue
            queue.append(w)
            if len(queue) > stats.frontier_peak:
                stats.frontier_peak = len(queue)
    return (BUDGET_HIT if truncated else EXHAUSTED), None


def _outcome(status, found, stabilizations, stats, t0) -> SearchOutcome:
    stats.elapsed_seconds = time.monotonic() - t0
    witness = None
    if found is not None:
        vl, state, alex = found
        witness = Witness(vl, state, alex, stabilizations)
    return SearchOutcome(status, witness, stats)


def gridstate_finder_commute(start: VertList, limits: SearchLimits = SearchLimits()) -> SearchOutcome:
    """Search the commutation class of ``start`` and its reverse for a nice diagram."""
    t0 = time.monotonic()
    stats = SearchStats()
    status, found = _bfs([start, rev(start)], limits, t0 + limits.max_seconds, stats, try_realizations)
    return _outcome(status, found, 0, stats, t0)


def gridstate_finder_stab(start: VertList, limits: SearchLimits = SearchLimits()) -> SearchOutcome:
    """Commutation search, then one X-NW stabilization of every diagram reached.

    The node budget applies to each of the two stages; the time budget covers
    both.
    """
    t0 = time.monotonic()
    deadline = t0 + limits.max_seconds
    stats = SearchStats()
    closure: list[VertList] = []
    status, found = _bfs([start, rev(start)], limits, deadline, stats, try_realizations, closure)
    if status == NICE_FOUND:
        return _outcome(status, found, 0, stats, t0)
    first_stage_complete = status == EXHAUSTED
    n = len(start)
    seeds = (x_nw(d, i) for d in closure for i in range(1, n + 1))
    status, found = _bfs(seeds, limits, deadline, stats, try_realizations)
    if status == EXHAUSTED and not first_stage_complete:
        status = BUDGET_HIT
    return _outcome(status, found, 1, stats, t0)


def search(start: VertList, limits: SearchLimits = SearchLimits(), stabilize: int = 1) -> SearchOutcome:
    if stabilize not in (0, 1):
        raise ValueError("only 0 or 1 stabilizations are supported")
    if stabilize:
        return gridstate_finder_stab(start, limits)
    return gridstate_finder_commute(start, limits)


def verify_witness(w: Witness) -> None:
    """Raise ConsistencyError unless the witness is a realization with that unique perfect state."""
    m = w_matrix(w.vertlist)
    rep = detect_unique_perfect(m)
    if rep.status is not Status.UNIQUE or rep.state != w.state:
        raise ConsistencyError(f"witness {w} does not revalidate: {rep}")
    if winding_value(m, w.state) != rep.bound:
        raise ConsistencyError(f"witness state misses the bound {rep.bound}")
    if w.alexander != rep.bound + alexander_constant(w.vertlist):
        raise ConsistencyError("witness grading differs from bound + constant")
