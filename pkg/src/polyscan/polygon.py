"""Polygon ring, orientation, simplicity oracle and the reversal correction."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .geom import (
    _DEGEN,
    _PROPER,
    EPSILON,
    CrossType,
    Point,
    Segment,
    segment_cross,
)


class DegenerateArea(Exception):
    """Shoelace sum is zero within tolerance; no orientation is defined."""


class NotACrossing(Exception):
    """The named edge pair does not properly cross."""


class Orientation(Enum):
    CCW = 1
    CW = -1


@dataclass(frozen=True)
class Polygon:
    """Closed vertex ring; edge i joins vertex i to vertex (i+1) mod N.

    The closing edge is implicit: the last vertex is never a repeat of the
    first.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        n = len(self.vertices)
        if n < 3:
            raise ValueError(f"polygon needs at least 3 vertices, got {n}")
        for i in range(n):
            if self.vertices[i] == self.vertices[(i + 1) % n]:
                raise ValueError(f"zero-length edge at vertex {i}")

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence[float]]) -> "Polygon":
        return cls(tuple(Point(float(x), float(y)) for x, y in coords))

    def __len__(self) -> int:
        return len(self.vertices)

    def edge(self, i: int) -> Segment:
        n = len(self.vertices)
        return Segment(self.vertices[i % n], self.vertices[(i + 1) % n])

    def coords(self) -> list[tuple[float, float]]:
        return [(p.x, p.y) for p in self.vertices]

    def bbox(self) -> tuple[float, float, float, float]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def edges_adjacent(i: int, j: int, n: int) -> bool:
    """True iff polygon edges i and j share a vertex."""
    return i == j or (i + 1) % n == j or (j + 1) % n == i


def signed_area2(poly: Polygon) -> float:
    """Twice the signed area (shoelace sum)."""
    acc = 0.0
    pts = poly.vertices
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        acc += p.x * q.y - q.x * p.y
    return acc


def signed_area_sign(poly: Polygon) -> Orientation:
    """CCW iff the shoelace sum is positive; raises DegenerateArea near zero."""
    area2 = signed_area2(poly)
    xmin, ymin, xmax, ymax = poly.bbox()
    scale = (xmax - xmin + ymax - ymin) ** 2
    if abs(area2) <= EPSILON * scale:
        raise DegenerateArea(f"shoelace sum {area2} below tolerance")
    return Orientation.CCW if area2 > 0.0 else Orientation.CW


def reverse_range(poly: Polygon, lo: int, hi: int) -> Polygon:
    """Reverse the vertex subsequence [lo, hi]; everything else untouched."""
    n = len(poly)
    if not (0 <= lo <= hi < n):
        raise IndexError(f"reversal range [{lo}, {hi}] out of bounds for N={n}")
    pts = list(poly.vertices)
    pts[lo:hi + 1] = pts[lo:hi + 1][::-1]
    return Polygon(tuple(pts))


def correct_crossing(poly: Polygon, i: int, j: int) -> Polygon:
    """Untangle the proper crossing of edges i and j (i < j).

    Reverses vertices [i+1, j]; if the shoelace sign flipped, reverses
    vertices [1, N-1] to restore the input orientation.
    """
    n = len(poly)
    if not (0 <= i < j < n):
        raise IndexError(f"edge pair ({i}, {j}) out of bounds for N={n}")
    if edges_adjacent(i, j, n):
        raise NotACrossing(f"edges {i} and {j} are adjacent")
    if segment_cross(poly.edge(i), poly.edge(j)).kind is not CrossType.PROPER:
        raise NotACrossing(f"edges {i} and {j} do not properly cross")
    try:
        before = signed_area_sign(poly)
    except DegenerateArea:
        before = None
    out = reverse_range(poly, i + 1, j)
    if before is not None:
        try:
            after = signed_area_sign(out)
        except DegenerateArea:
            after = None
        if after is not None and after is not before:
            out = reverse_range(out, 1, n - 1)
    return out


def is_simple(poly: Polygon) -> bool:
    """All-pairs oracle: no non-adjacent edge pair meets (properly or
    degenerately)."""
    from .geom import _cross_coords

    pts = poly.vertices
    n = len(pts)
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    for i in range(n):
        ax, ay = xs[i], ys[i]
        bx, by = xs[(i + 1) % n], ys[(i + 1) % n]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            code, _, _ = _cross_coords(ax, ay, bx, by,
                                       xs[j], ys[j],
                                       xs[(j + 1) % n], ys[(j + 1) % n])
            if code == _PROPER or code == _DEGEN:
                return False
    return True
