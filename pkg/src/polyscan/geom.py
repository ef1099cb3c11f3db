"""Planar primitives: points, segments, orientation sign and crossing tests."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

# Collinearity threshold, relative to the magnitude of the cross-product terms.
EPSILON = 1e-12


class Axis(Enum):
    X = 0
    Y = 1

    @property
    def perpendicular(self) -> "Axis":
        return Axis.Y if self is Axis.X else Axis.X


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinate ({self.x}, {self.y})")

    def coord(self, axis: Axis) -> float:
        return self.x if axis is Axis.X else self.y

    def translated(self, dx: float, dy: float) -> "Point":
        return Point(self.x + dx, self.y + dy)


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("zero-length segment")

    def span(self, axis: Axis) -> tuple[float, float]:
        u, v = self.a.coord(axis), self.b.coord(axis)
        return (u, v) if u <= v else (v, u)


class CrossType(Enum):
    NONE = "none"
    PROPER = "proper"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class Crossing:
    """Classification of a segment pair: no contact, a single interior
    crossing point, or a degenerate contact (endpoint touch / collinear
    overlap)."""

    kind: CrossType
    at: Point | None = None

    def __post_init__(self) -> None:
        if (self.kind is CrossType.PROPER) != (self.at is not None):
            raise ValueError("PROPER iff a crossing point is present")


NO_CROSS = Crossing(CrossType.NONE)
DEGENERATE_CROSS = Crossing(CrossType.DEGENERATE)


def _orient(ax: float, ay: float, bx: float, by: float,
            cx: float, cy: float) -> int:
    """Sign of the cross product (b-a) x (c-a), with a relative tolerance."""
    t1 = (bx - ax) * (cy - ay)
    t2 = (by - ay) * (cx - ax)
    det = t1 - t2
    scale = abs(t1) + abs(t2)
    if abs(det) <= EPSILON * scale:
        return 0
    return 1 if det > 0.0 else -1


def orientation_sign(p: Point, q: Point, r: Point) -> int:
    """Turn direction p->q->r: +1 counter-clockwise, -1 clockwise, 0 collinear."""
    return _orient(p.x, p.y, q.x, q.y, r.x, r.y)


def _on_closed_bbox(ax: float, ay: float, bx: float, by: float,
                    px: float, py: float) -> bool:
    # Assumes p collinear with a-b; membership reduces to a bbox check.
    return (min(ax, bx) <= px <= max(ax, bx)
            and min(ay, by) <= py <= max(ay, by))


# Return codes for the coordinate-level crossing test.
_NONE, _PROPER, _DEGEN = 0, 1, 2


def _cross_coords(ax: float, ay: float, bx: float, by: float,
                  cx: float, cy: float, dx: float, dy: float
                  ) -> tuple[int, float, float]:
    """Classify segments (a,b) and (c,d); hot-loop form working on raw floats.

    Returns (code, x, y) where code is _NONE/_PROPER/_DEGEN and (x, y) is the
    crossing point for _PROPER (zeros otherwise).
    """
    o1 = _orient(ax, ay, bx, by, cx, cy)
    o2 = _orient(ax, ay, bx, by, dx, dy)
    o3 = _orient(cx, cy, dx, dy, ax, ay)
    o4 = _orient(cx, cy, dx, dy, bx, by)

    if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
        # Collinear: degenerate iff the closed 1D projections overlap.
        if abs(bx - ax) >= abs(by - ay):
            lo1, hi1 = min(ax, bx), max(ax, bx)
            lo2, hi2 = min(cx, dx), max(cx, dx)
        else:
            lo1, hi1 = min(ay, by), max(ay, by)
            lo2, hi2 = min(cy, dy), max(cy, dy)
        if max(lo1, lo2) <= min(hi1, hi2):
            return _DEGEN, 0.0, 0.0
        return _NONE, 0.0, 0.0

    if o1 != o2 and o3 != o4 and o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        # Proper crossing; solve a + t*(b-a) meeting the line through (c,d).
        rx, ry = bx - ax, by - ay
        sx, sy = dx - cx, dy - cy
        denom = rx * sy - ry * sx
        t = ((cx - ax) * sy - (cy - ay) * sx) / denom
        return _PROPER, ax + t * rx, ay + t * ry

    if o1 == 0 and _on_closed_bbox(ax, ay, bx, by, cx, cy):
        return _DEGEN, 0.0, 0.0
    if o2 == 0 and _on_closed_bbox(ax, ay, bx, by, dx, dy):
        return _DEGEN, 0.0, 0.0
    if o3 == 0 and _on_closed_bbox(cx, cy, dx, dy, ax, ay):
        return _DEGEN, 0.0, 0.0
    if o4 == 0 and _on_closed_bbox(cx, cy, dx, dy, bx, by):
        return _DEGEN, 0.0, 0.0
    return _NONE, 0.0, 0.0


def segment_cross(s1: Segment, s2: Segment) -> Crossing:
    """Classify how two segments meet.

    Segments sharing an endpoint by construction (adjacent polygon edges)
    must be filtered by the caller; an exact shared endpoint here is a
    degenerate contact.
    """
    code, x, y = _cross_coords(s1.a.x, s1.a.y, s1.b.x, s1.b.y,
                               s2.a.x, s2.a.y, s2.b.x, s2.b.y)
    if code == _PROPER:
        return Crossing(CrossType.PROPER, Point(x, y))
    if code == _DEGEN:
        return DEGENERATE_CROSS
    return NO_CROSS


def interval_overlap(s1: Segment, s2: Segment, axis: Axis) -> bool:
    """True iff the closed projections of the two segments onto `axis` meet."""
    lo1, hi1 = s1.span(axis)
    lo2, hi2 = s2.span(axis)
    return max(lo1, lo2) <= min(hi1, hi2)
