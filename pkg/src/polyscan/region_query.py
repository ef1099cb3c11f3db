"""Isolated per-edge crossing query over the sorted array alone.

The sorted array is split into five regions relative to the studied edge:
the span between its extremities, then lower-left, lower-right, upper-left
and upper-right corners. Walking away from the span in either direction,
exploration of a corner stops once its chain section is homogeneous, i.e.
encountered vertex numbers form the consecutive run of an uninterrupted
chain.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .geom import _DEGEN, _PROPER, _cross_coords
from .polygon import Polygon, edges_adjacent
from .scanline import SortedOrder


class QueryMode(Enum):
    STRICT = "strict"
    RELAXED = "relaxed"


@dataclass
class SectionTracker:
    """Completion test for one corner region.

    `chain_sign` is the expected vertex-number step along the chain when
    walking away from the edge; `walk_step` is the direction of the walk in
    the sorted array (+1 upward, -1 downward). `start` unset is encoded -1.
    """

    chain_sign: int
    walk_step: int
    start: int = -1
    end: int = 0
    num_start: int = -1
    complete: bool = False

    def feed(self, cand: int, pos: int, relaxed: bool) -> None:
        if self.start < 0:
            self.start = cand
            self.end = cand + self.chain_sign
            self.num_start = pos
        elif cand == self.end:
            if pos == self.num_start + self.walk_step:
                # Perpendicular segment: the next index sits at the very
                # next array position; reset rather than complete.
                self.start = -1
            else:
                self.complete = True
        elif (cand - self.start) * self.chain_sign > 0:
            # Same section, further along the chain: restart the run there.
            if not (relaxed and self.complete):
                self.start = cand
                self.end = cand + self.chain_sign
                self.num_start = pos
                self.complete = False
        else:
            # Sequence broken by an earlier chain index.
            self.start = -1
            self.complete = False


@dataclass
class QueryFrame:
    half: int
    lower_left: SectionTracker
    lower_right: SectionTracker
    upper_left: SectionTracker
    upper_right: SectionTracker
    mode: QueryMode


@dataclass
class QueryResult:
    crossings: list[int]
    degenerate: list[int]
    explored: int


def renumber_from_lowest(poly: Polygon, so: SortedOrder
                         ) -> tuple[Polygon, SortedOrder]:
    """Rotate vertex labels so the vertex at sorted position 0 is vertex 0.

    Afterwards the two chains from bottom to top are [1, half) and
    (half, N), making side membership an index comparison against half,
    the label of the topmost point.
    """
    n = len(poly)
    shift = so.order[0]
    if shift == 0:
        return poly, so.copy()
    pts = poly.vertices
    rotated = Polygon(tuple(pts[(shift + t) % n] for t in range(n)))
    order = [(v - shift) % n for v in so.order]
    rank = [0] * n
    for pos, v in enumerate(order):
        rank[v] = pos
    return rotated, SortedOrder(so.axis, order, rank, list(so.run_start))


def query_edge_full(poly: Polygon, so: SortedOrder, i: int,
                    mode: QueryMode = QueryMode.STRICT,
                    higher_only: bool = False) -> QueryResult:
    """Find the edges crossing edge i, plus degenerate contacts, using only
    the sorted array. Inputs must be renumbered (see renumber_from_lowest).
    """
    n = len(poly)
    pts = poly.vertices
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    order, rank = so.order, so.rank
    relaxed = mode is QueryMode.RELAXED
    half = order[-1]

    vi, vj = i, (i + 1) % n
    ax, ay = xs[vi], ys[vi]
    bx, by = xs[vj], ys[vj]
    lo_pos, hi_pos = rank[vi], rank[vj]
    if lo_pos > hi_pos:
        lo_pos, hi_pos = hi_pos, lo_pos

    crossings: list[int] = []
    degenerate: list[int] = []
    seen: set[int] = set()
    explored = 0

    def test_vertex(w: int) -> None:
        for f in (w, (w - 1) % n):
            if f in seen:
                continue
            seen.add(f)
            if edges_adjacent(i, f, n):
                continue
            code, _, _ = _cross_coords(ax, ay, bx, by,
                                       xs[f], ys[f],
                                       xs[(f + 1) % n], ys[(f + 1) % n])
            if code == _PROPER:
                crossings.append(f)
            elif code == _DEGEN:
                degenerate.append(f)

    # Phase 1: the scan-line interval between the extremities.
    for r in range(lo_pos + 1, hi_pos):
        explored += 1
        test_vertex(order[r])

    frame = QueryFrame(
        half=half,
        lower_left=SectionTracker(chain_sign=+1, walk_step=-1),
        lower_right=SectionTracker(chain_sign=-1, walk_step=-1),
        upper_left=SectionTracker(chain_sign=-1, walk_step=+1),
        upper_right=SectionTracker(chain_sign=+1, walk_step=+1),
        mode=mode)

    # Phase 2: below the lower extremity, until both lower corners complete.
    r = lo_pos - 1
    while r >= 0 and not (frame.lower_left.complete
                          and frame.lower_right.complete):
        cand = order[r]
        explored += 1
        test_vertex(cand)
        if cand != 0 and cand != half:
            tracker = frame.lower_right if cand < half else frame.lower_left
            tracker.feed(cand, r, relaxed)
        r -= 1

    # Phase 3: above the higher extremity, until both upper corners complete.
    r = hi_pos + 1
    while r < n and not (frame.upper_left.complete
                         and frame.upper_right.complete):
        cand = order[r]
        explored += 1
        test_vertex(cand)
        if cand != 0 and cand != half:
            tracker = frame.upper_right if cand < half else frame.upper_left
            tracker.feed(cand, r, relaxed)
        r += 1

    result = sorted(c for c in crossings if not higher_only or c > i)
    return QueryResult(result, sorted(degenerate), explored)


def query_edge(poly: Polygon, so: SortedOrder, i: int,
               mode: QueryMode = QueryMode.STRICT,
               higher_only: bool = False) -> list[int]:
    return query_edge_full(poly, so, i, mode, higher_only).crossings


def query_explored_count(poly: Polygon, so: SortedOrder, i: int,
                         mode: QueryMode = QueryMode.STRICT) -> int:
    """Number of candidate points examined across all three phases."""
    return query_edge_full(poly, so, i, mode).explored
