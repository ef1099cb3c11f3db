"""Polygon file formats (WKT subset, CSV x,y) and the JSON run report."""
from __future__ import annotations

import json
import re
from pathlib import Path

from .geom import Point
from .polygon import Polygon
from .scanline import IntersectionEvent, RunMetrics


class ParseError(Exception):
    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" at line {line}" + (f", column {column}"
                                        if column is not None else "")
        super().__init__(message + loc)


class TooFewVertices(ParseError):
    pass


class DuplicateConsecutiveVertex(ParseError):
    pass


_WKT_RE = re.compile(
    r"^\s*POLYGON\s*\(\s*\(\s*(?P<ring>[^()]*?)\s*\)\s*\)\s*$",
    re.IGNORECASE)


def _build_polygon(coords: list[tuple[float, float]]) -> Polygon:
    # An explicit closing duplicate vertex is accepted and dropped.
    if len(coords) > 1 and coords[0] == coords[-1]:
        coords = coords[:-1]
    if len(coords) < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {len(coords)}")
    n = len(coords)
    for i in range(n):
        if coords[i] == coords[(i + 1) % n]:
            raise DuplicateConsecutiveVertex(
                f"consecutive duplicate vertex at index {i}")
    return Polygon(tuple(Point(x, y) for x, y in coords))


def parse_wkt(text: str) -> Polygon:
    stripped = text.strip()
    upper = stripped.upper()
    if upper.startswith("MULTIPOLYGON"):
        raise ParseError("MULTIPOLYGON is not supported; single rings only")
    m = _WKT_RE.match(stripped)
    if m is None:
        if upper.startswith("POLYGON") and stripped.count("(") > 2:
            raise ParseError("polygons with holes are not supported")
        raise ParseError("expected POLYGON ((x y, x y, ...))")
    coords = []
    for idx, token in enumerate(m.group("ring").split(","), start=1):
        parts = token.split()
        if len(parts) != 2:
            raise ParseError(f"bad coordinate pair {token.strip()!r}",
                             line=1, column=idx)
        try:
            coords.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise ParseError(f"bad number in {token.strip()!r}",
                             line=1, column=idx) from None
    return _build_polygon(coords)


def parse_csv(text: str) -> Polygon:
    coords = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise ParseError(f"expected 'x,y', got {line!r}", line=lineno)
        try:
            coords.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise ParseError(f"bad number in {line!r}", line=lineno) from None
    return _build_polygon(coords)


def write_wkt(poly: Polygon) -> str:
    ring = ", ".join(f"{p.x!r} {p.y!r}" for p in poly.vertices)
    first = poly.vertices[0]
    return f"POLYGON (({ring}, {first.x!r} {first.y!r}))"


def write_csv(poly: Polygon) -> str:
    return "\n".join(f"{p.x!r},{p.y!r}" for p in poly.vertices) + "\n"


def detect_format(path: Path, explicit: str | None = None) -> str:
    if explicit is not None:
        return explicit
    return "csv" if path.suffix.lower() == ".csv" else "wkt"


def parse_polygon(path: Path, fmt: str | None = None) -> Polygon:
    fmt = detect_format(path, fmt)
    text = Path(path).read_text()
    if fmt == "wkt":
        return parse_wkt(text)
    if fmt == "csv":
        return parse_csv(text)
    raise ParseError(f"unknown format {fmt!r}")


def write_polygon(poly: Polygon, path: Path, fmt: str | None = None) -> None:
    fmt = detect_format(path, fmt)
    text = write_wkt(poly) if fmt == "wkt" else write_csv(poly)
    Path(path).write_text(text)


def report_document(n: int, events: list[IntersectionEvent],
                    metrics: RunMetrics) -> dict:
    return {
        "n": n,
        "k": len(events),
        "events": [{"edge_i": ev.edge_i, "edge_j": ev.edge_j,
                    "x": ev.at.x, "y": ev.at.y} for ev in events],
        "metrics": {"n_real": metrics.n_real,
                    "n_supp": metrics.n_supp,
                    "explored": metrics.explored},
    }


def write_report(n: int, events: list[IntersectionEvent],
                 metrics: RunMetrics, path: Path | None = None) -> str:
    doc = json.dumps(report_document(n, events, metrics))
    if path is not None:
        Path(path).write_text(doc)
    return doc


def events_from_report(doc: dict) -> list[IntersectionEvent]:
    return [IntersectionEvent(ev["edge_i"], ev["edge_j"],
                              Point(ev["x"], ev["y"]))
            for ev in doc["events"]]
