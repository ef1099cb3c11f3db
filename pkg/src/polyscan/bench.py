"""Synthetic corpora, instrumented runs and log-log exponent fits.

The original study corpora are unavailable, so four synthetic families stand
in: RandomStar (locally shuffled angular order, self-intersecting),
NoisyContour (radially perturbed circle, simple), WorstCaseFan (elongated
near-parallel edges all overlapping along the sort direction) and
PerpendicularHeavy (ladder of edges perpendicular to the sort axis).
"""
from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .polygon import Polygon
from .region_query import QueryMode, query_edge_full, renumber_from_lowest
from .scanline import (
    RunMetrics,
    correct_all,
    major_axis,
    report_with_metrics,
    sort_vertices,
)


class InvalidSpec(Exception):
    pass


class InsufficientData(Exception):
    pass


class Family(Enum):
    RANDOM_STAR = "random-star"
    NOISY_CONTOUR = "noisy-contour"
    WORST_CASE_FAN = "worst-case-fan"
    PERPENDICULAR_HEAVY = "perpendicular-heavy"


class Algo(Enum):
    REPORT = "report"
    CORRECT = "correct"
    QUERY_STRICT = "query-strict"
    QUERY_RELAXED = "query-relaxed"


@dataclass(frozen=True)
class CorpusSpec:
    family: Family
    sizes: tuple[int, ...]
    seeds: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sizes or min(self.sizes) < 4:
            raise InvalidSpec("sizes must be >= 4")
        if not self.seeds:
            raise InvalidSpec("at least one seed required")

    def polygons(self) -> Iterator[tuple[int, int, Polygon]]:
        for n in self.sizes:
            for seed in self.seeds:
                yield n, seed, gen_polygon(self.family, n, seed)


@dataclass(frozen=True)
class FitResult:
    constant: float
    exponent: float
    correlation: float
    n_points: int


def gen_polygon(family: Family, n: int, seed: int) -> Polygon:
    """Deterministic polygon of the given family; same seed, same vertices."""
    if n < 4:
        raise InvalidSpec(f"N must be >= 4, got {n}")
    rng = random.Random((family.value, n, seed).__repr__())
    if family is Family.RANDOM_STAR:
        return _random_star(n, rng)
    if family is Family.NOISY_CONTOUR:
        return _noisy_contour(n, rng)
    if family is Family.WORST_CASE_FAN:
        return _worst_case_fan(n, rng)
    if family is Family.PERPENDICULAR_HEAVY:
        return _perpendicular_heavy(n, rng)
    raise InvalidSpec(f"unknown family {family}")


# Radial noise shrinks with N so explored-per-segment grows sublinearly,
# mimicking contour-like data where consecutive vertices stay close.
_RADIAL_DECAY = 0.7


def _random_star(n: int, rng: random.Random) -> Polygon:
    step = 2.0 * math.pi / n
    amp = n ** (-_RADIAL_DECAY)
    coords = []
    for i in range(n):
        theta = i * step + rng.uniform(-1.3, 1.3) * step
        r = 1.0 + rng.uniform(-1.0, 1.0) * amp
        coords.append((r * math.cos(theta), r * math.sin(theta)))
    return Polygon.from_coords(coords)


def _noisy_contour(n: int, rng: random.Random,
                   amplitude: float | None = None) -> Polygon:
    step = 2.0 * math.pi / n
    amp = n ** (-_RADIAL_DECAY) if amplitude is None else amplitude
    coords = []
    for i in range(n):
        # Angular jitter stays below half a step, preserving angular order,
        # so the contour remains simple at any noise amplitude.
        theta = i * step + rng.uniform(-0.4, 0.4) * step
        r = 1.0 + rng.uniform(-1.0, 1.0) * amp
        coords.append((r * math.cos(theta), r * math.sin(theta)))
    return Polygon.from_coords(coords)


def _worst_case_fan(n: int, rng: random.Random) -> Polygon:
    # Near-vertical teeth all spanning the full height; the tall bounding
    # box forces the sort axis to Y, so every edge interval overlaps every
    # other one.
    m = n // 2
    w = 1.0 / m
    height = float(n)
    coords = []
    for t in range(m):
        jx = rng.uniform(-0.01, 0.01) * w
        coords.append((t * w + jx, rng.uniform(-0.01, 0.01)))
        jx = rng.uniform(-0.01, 0.01) * w
        coords.append((t * w + 0.45 * w + jx, height + rng.uniform(-0.01, 0.01)))
    if n % 2:
        coords.append((1.0 + w, height * 0.5 + rng.uniform(-0.01, 0.01)))
    return Polygon.from_coords(coords)


def _perpendicular_heavy(n: int, rng: random.Random) -> Polygon:
    # Ladder of near-horizontal rungs under a Y sort axis.
    m = n // 2
    h = 4.0 / m
    coords = []
    for t in range(m):
        coords.append((rng.uniform(-0.02, 0.02), t * h + rng.uniform(-0.1, 0.1) * h))
        coords.append((1.0 + rng.uniform(-0.02, 0.02),
                       t * h + 0.5 * h + rng.uniform(-0.1, 0.1) * h))
    if n % 2:
        coords.append((0.5, m * h + rng.uniform(0.1, 0.2) * h))
    return Polygon.from_coords(coords)


def run_instrumented(poly: Polygon, algo: Algo) -> RunMetrics:
    """Execute one algorithm with counting enabled."""
    n = len(poly)
    if algo is Algo.REPORT:
        _, metrics = report_with_metrics(poly)
        return metrics
    if algo is Algo.CORRECT:
        _, _, metrics = correct_all(poly)
        return metrics
    mode = QueryMode.STRICT if algo is Algo.QUERY_STRICT else QueryMode.RELAXED
    axis = major_axis(poly)
    rpoly, rso = renumber_from_lowest(poly, sort_vertices(poly, axis))
    metrics = RunMetrics(n_vertices=n)
    pairs = 0
    for i in range(n):
        res = query_edge_full(rpoly, rso, i, mode, higher_only=True)
        metrics.explored += res.explored
        pairs += len(res.crossings)
    metrics.n_crossings = pairs
    metrics.n_real = n + pairs  # one pass, no backtracking in query mode
    return metrics


@dataclass
class BenchRow:
    family: str
    n: int
    seed: int
    algo: str
    explored: int
    avg_explored: float
    k: int
    n_real: int
    n_supp: int


def run_corpus(spec: CorpusSpec, algos: Sequence[Algo]) -> list[BenchRow]:
    rows = []
    for n, seed, poly in spec.polygons():
        for algo in algos:
            m = run_instrumented(poly, algo)
            rows.append(BenchRow(spec.family.value, n, seed, algo.value,
                                 m.explored, m.explored_per_segment,
                                 m.n_crossings, m.n_real, m.n_supp))
    return rows


def fit_exponent(points: Sequence[tuple[float, float]]) -> FitResult:
    """Least squares on (log N, log avg): avg ~ constant * N**exponent."""
    if len(points) < 3:
        raise InsufficientData(f"need >= 3 points, got {len(points)}")
    if any(x <= 0 or y <= 0 for x, y in points):
        raise InsufficientData("all points must be positive for a log-log fit")
    lx = np.log(np.array([x for x, _ in points], dtype=float))
    ly = np.log(np.array([y for _, y in points], dtype=float))
    exponent, intercept = np.polyfit(lx, ly, 1)
    if np.allclose(ly, ly[0]):
        corr = 1.0  # constant data: the fit is exact, r is undefined
    else:
        corr = float(np.corrcoef(lx, ly)[0, 1])
    return FitResult(constant=float(np.exp(intercept)),
                     exponent=float(exponent),
                     correlation=corr,
                     n_points=len(points))


def fit_rows(rows: Sequence[BenchRow]) -> dict[tuple[str, str], FitResult]:
    """One fit per (family, algo) on per-size means of avg_explored."""
    groups: dict[tuple[str, str], dict[int, list[float]]] = {}
    for row in rows:
        groups.setdefault((row.family, row.algo), {}) \
              .setdefault(row.n, []).append(row.avg_explored)
    fits = {}
    for key, by_n in groups.items():
        points = [(n, sum(v) / len(v)) for n, v in sorted(by_n.items())]
        fits[key] = fit_exponent(points)
    return fits


def write_bench_csv(rows: Sequence[BenchRow], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["family", "N", "seed", "algo", "explored",
                    "avg_explored", "k", "n_real", "n_supp"])
        for r in rows:
            w.writerow([r.family, r.n, r.seed, r.algo, r.explored,
                        repr(r.avg_explored), r.k, r.n_real, r.n_supp])


def write_fit_csv(fits: dict[tuple[str, str], FitResult], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["family", "algo", "constant", "exponent", "correlation"])
        for (family, algo), fit in sorted(fits.items()):
            w.writerow([family, algo, repr(fit.constant),
                        repr(fit.exponent), repr(fit.correlation)])


def write_scatter_svg(rows: Sequence[BenchRow],
                      fits: dict[tuple[str, str], FitResult],
                      path: Path) -> None:
    """Log-log scatter of avg explored points per segment with fit lines."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 5))
    for (family, algo), fit in sorted(fits.items()):
        xs = [r.n for r in rows if r.family == family and r.algo == algo]
        ys = [r.avg_explored for r in rows
              if r.family == family and r.algo == algo]
        sc = ax.scatter(xs, ys, s=10, alpha=0.5, label=f"{family}/{algo}")
        grid = np.geomspace(min(xs), max(xs), 50)
        ax.plot(grid, fit.constant * grid ** fit.exponent,
                color=sc.get_facecolor()[0],
                label=f"{fit.constant:.2f} N^{fit.exponent:.2f}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("N (vertices)")
    ax.set_ylabel("avg explored points per segment")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def backtrack_overhead_report(rows: Sequence[BenchRow], path: Path | None = None
                              ) -> dict[str, float]:
    """Summarize unusual-backtracking overhead over corrected runs.

    Per polygon, the overhead is n_supp as a percentage of N. Optionally
    writes the per-polygon table as CSV.
    """
    corrected = [r for r in rows if r.algo == Algo.CORRECT.value]
    pcts = [100.0 * r.n_supp / r.n for r in corrected]
    summary = {
        "n_polygons": float(len(corrected)),
        "fraction_with_supp": (
            sum(1 for r in corrected if r.n_supp > 0) / len(corrected)
            if corrected else 0.0),
        "mean_pct": sum(pcts) / len(pcts) if pcts else 0.0,
        "max_pct": max(pcts) if pcts else 0.0,
    }
    if path is not None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["family", "N", "seed", "n_supp", "pct_of_n"])
            for r, pct in zip(corrected, pcts):
                w.writerow([r.family, r.n, r.seed, r.n_supp, repr(pct)])
    return summary
