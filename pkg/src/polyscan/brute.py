"""Brute-force oracles: all-pairs reporting, two correctors, per-edge query."""
from __future__ import annotations

from .geom import _DEGEN, _PROPER, Point, _cross_coords
from .polygon import Polygon, correct_crossing, edges_adjacent
from .scanline import (
    CORRECTION_CAP_FACTOR,
    DegenerateInput,
    IntersectionEvent,
    NonTermination,
)


def _pair_cross(poly: Polygon, i: int, j: int) -> tuple[int, float, float]:
    pts = poly.vertices
    n = len(pts)
    a, b = pts[i], pts[(i + 1) % n]
    c, d = pts[j], pts[(j + 1) % n]
    return _cross_coords(a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y)


def bf_report(poly: Polygon) -> list[IntersectionEvent]:
    """All proper crossings over non-adjacent edge pairs, in (i, j) order."""
    n = len(poly)
    events = []
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            code, x, y = _pair_cross(poly, i, j)
            if code == _DEGEN:
                raise DegenerateInput(i, j)
            if code == _PROPER:
                events.append(IntersectionEvent(i, j, Point(x, y)))
    return events


def bf_query(poly: Polygon, i: int, higher_only: bool = False) -> list[int]:
    """All non-adjacent edges properly crossing edge i."""
    n = len(poly)
    out = []
    for j in range(n):
        if edges_adjacent(i, j, n):
            continue
        if higher_only and j <= i:
            continue
        code, _, _ = _pair_cross(poly, i, j)
        if code == _PROPER:
            out.append(j)
    return sorted(out)


def _first_crossing(poly: Polygon, lo: int, hi: int,
                    start_i: int | None = None) -> tuple[int, int] | None:
    """Lexicographically first properly-crossing pair with lo <= i < j <= hi."""
    n = len(poly)
    first = lo if start_i is None else start_i
    for i in range(first, hi):
        for j in range(i + 2, hi + 1):
            if edges_adjacent(i, j, n):
                continue
            code, _, _ = _pair_cross(poly, i, j)
            if code == _DEGEN:
                raise DegenerateInput(i, j)
            if code == _PROPER:
                return (i, j)
    return None


def _event(poly: Polygon, i: int, j: int) -> IntersectionEvent:
    _, x, y = _pair_cross(poly, i, j)
    return IntersectionEvent(i, j, Point(x, y))


def bf_correct_v2(poly: Polygon) -> tuple[Polygon, list[IntersectionEvent]]:
    """Ascending-pair scan; after a fix, re-check the index range between the
    two involved lower indexes for freshly created crossings."""
    n = len(poly)
    cap = CORRECTION_CAP_FACTOR * n * n
    events: list[IntersectionEvent] = []

    def fix(i: int, j: int) -> None:
        nonlocal poly
        events.append(_event(poly, i, j))
        if len(events) > cap:
            raise NonTermination(f"exceeded {cap} corrections", poly, events)
        poly = correct_crossing(poly, i, j)

    while True:
        hit = _first_crossing(poly, 0, n - 1)
        if hit is None:
            return poly, events
        i, j = hit
        fix(i, j)
        # Re-check between the two lower indexes until that window is clean.
        while True:
            inner = _first_crossing(poly, i, j)
            if inner is None:
                break
            fix(*inner)


def bf_correct_v3(poly: Polygon) -> tuple[Polygon, list[IntersectionEvent]]:
    """Ascending-pair scan; after a fix only the two newly formed edges are
    re-checked against lower indexes, recursively for the lower one."""
    n = len(poly)
    cap = CORRECTION_CAP_FACTOR * n * n
    events: list[IntersectionEvent] = []

    def fix(i: int, j: int) -> None:
        nonlocal poly
        events.append(_event(poly, i, j))
        if len(events) > cap:
            raise NonTermination(f"exceeded {cap} corrections", poly, events)
        poly = correct_crossing(poly, i, j)

    def lowest_crossing_below(e: int) -> int | None:
        for a in range(e):
            if edges_adjacent(a, e, n):
                continue
            code, _, _ = _pair_cross(poly, a, e)
            if code == _DEGEN:
                raise DegenerateInput(a, e)
            if code == _PROPER:
                return a
        return None

    def fix_lower(e: int, depth: int = 0) -> None:
        assert depth <= n, "recursion must strictly lower an index"
        while True:
            a = lowest_crossing_below(e)
            if a is None:
                return
            fix(a, e)
            fix_lower(a, depth + 1)

    while True:
        hit = _first_crossing(poly, 0, n - 1)
        if hit is None:
            return poly, events
        i, j = hit
        fix(i, j)
        fix_lower(j)
        fix_lower(i)
