"""Minimal-memory scan over extremities sorted by the major coordinate.

Reporting walks each segment's sorted-position span; correcting additionally
backtracks after every reversal, honouring three special cases: restoring a
shortened segment's former upper exploration limit, admitting below-position
candidates inside the last impacted interval, and backtracking below the
current position when the corrected candidate's extremity lies lower.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .geom import _DEGEN, _PROPER, Axis, Point, _cross_coords
from .polygon import Polygon, DegenerateArea, edges_adjacent, signed_area2

# Hard cap on corrections: the backtracking loop has no termination proof.
CORRECTION_CAP_FACTOR = 4


class DegenerateInput(Exception):
    """A non-adjacent edge pair meets degenerately (endpoint touch or
    collinear overlap); the reversal correction is undefined for it."""

    def __init__(self, edge_i: int, edge_j: int):
        super().__init__(f"degenerate contact between edges {edge_i} and {edge_j}")
        self.edge_i = edge_i
        self.edge_j = edge_j


class NonTermination(Exception):
    """Correction count exceeded the hard cap; carries a diagnostic dump."""

    def __init__(self, message: str, polygon: Polygon, events: list):
        super().__init__(message)
        self.polygon = polygon
        self.events = events


@dataclass(frozen=True)
class IntersectionEvent:
    edge_i: int
    edge_j: int
    at: Point

    def __post_init__(self) -> None:
        if self.edge_i >= self.edge_j:
            raise ValueError("events are keyed by ordered edge pairs")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.edge_i, self.edge_j)


@dataclass
class RunMetrics:
    """Counters feeding the empirical complexity fits."""

    n_vertices: int
    n_crossings: int = 0
    n_real: int = 0
    explored: int = 0
    rescans: int = 0  # diagnostic: safety-net passes taken by the corrector

    @property
    def n_supp(self) -> int:
        # Extra vertex visits beyond one pass plus one backtrack per fix.
        return self.n_real - self.n_vertices - self.n_crossings

    @property
    def explored_per_segment(self) -> float:
        return self.explored / self.n_vertices


@dataclass
class SortedOrder:
    """Vertex indices sorted by one coordinate, with the inverse permutation
    and the start position of each equal-value run."""

    axis: Axis
    order: list[int]
    rank: list[int]
    run_start: list[int]

    def copy(self) -> "SortedOrder":
        return SortedOrder(self.axis, list(self.order), list(self.rank),
                           list(self.run_start))


def major_axis(poly: Polygon) -> Axis:
    """Axis with the larger coordinate range; ties go to X."""
    xmin, ymin, xmax, ymax = poly.bbox()
    return Axis.Y if (ymax - ymin) > (xmax - xmin) else Axis.X


def sort_vertices(poly: Polygon, axis: Axis) -> SortedOrder:
    """Stable sort by the exact axis coordinate, ties broken by vertex index."""
    n = len(poly)
    keys = [p.coord(axis) for p in poly.vertices]
    order = sorted(range(n), key=keys.__getitem__)
    rank = [0] * n
    for pos, v in enumerate(order):
        rank[v] = pos
    run_start = [0] * n
    for pos in range(1, n):
        if keys[order[pos]] == keys[order[pos - 1]]:
            run_start[pos] = run_start[pos - 1]
        else:
            run_start[pos] = pos
    return SortedOrder(axis, order, rank, run_start)


def resort_after_reversal(so: SortedOrder, lo: int, hi: int) -> SortedOrder:
    """Update `so` in place after the polygon's vertices [lo, hi] were
    reversed: every stored index v in the range becomes lo+hi-v.

    Coordinates did not move, only labels, so positions and run starts are
    unchanged. Returns `so` for convenience.
    """
    n = len(so.order)
    if not (0 <= lo <= hi < n):
        raise IndexError(f"range [{lo}, {hi}] out of bounds for N={n}")
    s = lo + hi
    old_positions = [so.rank[v] for v in range(lo, hi + 1)]
    for v, pos in zip(range(lo, hi + 1), old_positions):
        so.order[pos] = s - v
    for v, pos in zip(range(lo, hi + 1), old_positions):
        so.rank[s - v] = pos
    return so


def upward_segments(poly: Polygon, so: SortedOrder, v: int
                    ) -> list[tuple[int, int]]:
    """Edges at vertex v whose far endpoint ranks strictly higher.

    Returns (edge_index, far_vertex) pairs; 0, 1 or 2 of them.
    """
    n = len(poly)
    out = []
    nxt = (v + 1) % n
    if so.rank[nxt] > so.rank[v]:
        out.append((v, nxt))
    prv = (v - 1) % n
    if so.rank[prv] > so.rank[v]:
        out.append((prv, prv))
    return out


def report_intersections(poly: Polygon, axis: Axis | None = None
                         ) -> list[IntersectionEvent]:
    events, _ = report_with_metrics(poly, axis)
    return events


def report_with_metrics(poly: Polygon, axis: Axis | None = None
                        ) -> tuple[list[IntersectionEvent], RunMetrics]:
    """List all proper crossings by scanning each upward segment's span.

    Raises DegenerateInput on the first degenerate non-adjacent contact.
    """
    n = len(poly)
    if axis is None:
        axis = major_axis(poly)
    so = sort_vertices(poly, axis)
    metrics = RunMetrics(n_vertices=n)

    pts = poly.vertices
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    # Perpendicular-axis coordinates for the interval pre-check.
    ws = xs if axis is Axis.Y else ys

    order, rank = so.order, so.rank
    seen: set[tuple[int, int]] = set()
    events: list[IntersectionEvent] = []

    for p in range(n):
        metrics.n_real += 1
        v = order[p]
        for e, far in upward_segments(poly, so, v):
            e_lo, e_hi = ws[v], ws[far]
            if e_lo > e_hi:
                e_lo, e_hi = e_hi, e_lo
            upper = rank[far]
            for r in range(p + 1, upper):
                metrics.explored += 1
                w = order[r]
                for f, o in ((w, (w + 1) % n), ((w - 1) % n, (w - 1) % n)):
                    if rank[o] < r:
                        continue  # not an upward segment at r
                    if edges_adjacent(e, f, n):
                        continue
                    f_lo, f_hi = ws[w], ws[o]
                    if f_lo > f_hi:
                        f_lo, f_hi = f_hi, f_lo
                    if max(e_lo, f_lo) > min(e_hi, f_hi):
                        continue
                    code, cx, cy = _cross_coords(
                        xs[v], ys[v], xs[far], ys[far],
                        xs[w], ys[w], xs[o], ys[o])
                    if code == _DEGEN:
                        raise DegenerateInput(min(e, f), max(e, f))
                    if code == _PROPER:
                        pair = (min(e, f), max(e, f))
                        if pair not in seen:
                            seen.add(pair)
                            events.append(IntersectionEvent(
                                pair[0], pair[1], Point(cx, cy)))
                            # Crossing points count as processed real points.
                            metrics.n_crossings += 1
                            metrics.n_real += 1
    events.sort(key=lambda ev: ev.pair)
    return events, metrics


@dataclass
class ScanState:
    """Backtracking memory of the corrector."""

    last_pos: int | None = None
    former_upper: int | None = None
    impact_lo: int | None = None
    impact_hi: int | None = None

    def allows_backtrack(self, p: int) -> bool:
        return (self.impact_lo is not None
                and self.impact_lo <= p <= self.impact_hi)


def correct_all(poly: Polygon, axis: Axis | None = None
                ) -> tuple[Polygon, list[IntersectionEvent], RunMetrics]:
    """Correct every self-intersection by scan, reversal and backtracking.

    Returns the corrected polygon, the corrections in application order, and
    the run counters. Edge indices in events refer to the polygon state at
    the time each correction was applied.
    """
    n = len(poly)
    if axis is None:
        axis = major_axis(poly)
    so = sort_vertices(poly, axis)
    metrics = RunMetrics(n_vertices=n)
    cap = CORRECTION_CAP_FACTOR * n * n

    pts = list(poly.vertices)
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    ws = xs if axis is Axis.Y else ys

    try:
        sign0 = _area_sign(pts)
    except DegenerateArea:
        sign0 = None

    events: list[IntersectionEvent] = []
    state = ScanState()

    def reverse_block(lo: int, hi: int) -> None:
        pts[lo:hi + 1] = pts[lo:hi + 1][::-1]
        xs[lo:hi + 1] = xs[lo:hi + 1][::-1]
        ys[lo:hi + 1] = ys[lo:hi + 1][::-1]
        resort_after_reversal(so, lo, hi)

    def apply_correction(i: int, j: int) -> bool:
        """Reverse [i+1, j]; returns True if the orientation guard fired."""
        try:
            before = _area_sign(pts)
        except DegenerateArea:
            before = None
        reverse_block(i + 1, j)
        if before is None:
            return False
        try:
            after = _area_sign(pts)
        except DegenerateArea:
            return False
        if after != before:
            reverse_block(1, n - 1)
            return True
        return False

    def scan_pass() -> None:
        order, rank, run_start = so.order, so.rank, so.run_start
        p = 0
        while p < n:
            metrics.n_real += 1
            v = order[p]
            backtrack = state.allows_backtrack(p)
            found = None
            for e, far in upward_segments_fast(rank, v, n):
                e_lo, e_hi = ws[v], ws[far]
                if e_lo > e_hi:
                    e_lo, e_hi = e_hi, e_lo
                upper = rank[far]
                if state.last_pos == p and state.former_upper is not None:
                    upper = max(upper, state.former_upper)
                for r in range(p + 1, upper):
                    metrics.explored += 1
                    w = order[r]
                    for f, o in ((w, (w + 1) % n), ((w - 1) % n, (w - 1) % n)):
                        if rank[o] < r and not backtrack:
                            continue
                        if edges_adjacent(e, f, n):
                            continue
                        f_lo, f_hi = ws[w], ws[o]
                        if f_lo > f_hi:
                            f_lo, f_hi = f_hi, f_lo
                        if max(e_lo, f_lo) > min(e_hi, f_hi):
                            continue
                        code, cx, cy = _cross_coords(
                            xs[v], ys[v], xs[far], ys[far],
                            xs[w], ys[w], xs[o], ys[o])
                        if code == _DEGEN:
                            raise DegenerateInput(min(e, f), max(e, f))
                        if code == _PROPER:
                            found = (e, f, cx, cy, r, o, upper)
                            break
                    if found:
                        break
                if found:
                    break
            if not found:
                p += 1
                continue

            e, f, cx, cy, r, o, upper = found
            i, j = (e, f) if e < f else (f, e)
            events.append(IntersectionEvent(i, j, Point(cx, cy)))
            metrics.n_crossings += 1
            if metrics.n_crossings > cap:
                raise NonTermination(
                    f"exceeded {cap} corrections on N={n}",
                    Polygon(tuple(pts)), events)

            apply_correction(i, j)
            # Sorted positions touched by the correction: the reversed block
            # plus the pivot vertices whose incident edges changed. The set
            # of positions is unaffected by the relabelings, so it can be
            # read off after the reversal(s).
            impacted = [rank[t % n] for t in range(i, j + 2)]
            lo_imp, hi_imp = min(impacted), max(impacted)

            state.last_pos = p
            state.former_upper = upper
            state.impact_lo, state.impact_hi = lo_imp, max(hi_imp, r)
            if lo_imp < p:
                # Backtrack to the lowest extremity of the segments ending
                # at the lowest impacted point.
                u = order[lo_imp]
                target = min(lo_imp, rank[(u - 1) % n], rank[(u + 1) % n])
            else:
                target = p
            p = run_start[target]

    scan_pass()
    # Safety net: the local backtracking rule misses a rare configuration
    # (an untouched edge fully spanning a newly formed edge, anchored below
    # every impacted position). If any proper crossing survives, rescan
    # with fresh state.
    while _has_proper_crossing(pts, xs, ys, n):
        metrics.rescans += 1
        if metrics.rescans > n:
            raise NonTermination(
                f"rescan limit hit on N={n}", Polygon(tuple(pts)), events)
        state = ScanState()
        scan_pass()

    return Polygon(tuple(pts)), events, metrics


def upward_segments_fast(rank: list[int], v: int, n: int
                         ) -> tuple[tuple[int, int], ...]:
    rv = rank[v]
    nxt = (v + 1) % n
    prv = (v - 1) % n
    if rank[nxt] > rv:
        if rank[prv] > rv:
            return ((v, nxt), (prv, prv))
        return ((v, nxt),)
    if rank[prv] > rv:
        return ((prv, prv),)
    return ()


def _area_sign(pts: list[Point]) -> int:
    poly_area2 = 0.0
    n = len(pts)
    xmin = min(p.x for p in pts)
    xmax = max(p.x for p in pts)
    ymin = min(p.y for p in pts)
    ymax = max(p.y for p in pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        poly_area2 += p.x * q.y - q.x * p.y
    scale = (xmax - xmin + ymax - ymin) ** 2
    from .geom import EPSILON
    if abs(poly_area2) <= EPSILON * scale:
        raise DegenerateArea("zero-area polygon")
    return 1 if poly_area2 > 0.0 else -1


def _has_proper_crossing(pts: list[Point], xs: list[float], ys: list[float],
                         n: int) -> bool:
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            code, _, _ = _cross_coords(xs[i], ys[i],
                                       xs[(i + 1) % n], ys[(i + 1) % n],
                                       xs[j], ys[j],
                                       xs[(j + 1) % n], ys[(j + 1) % n])
            if code == _PROPER:
                return True
    return False
