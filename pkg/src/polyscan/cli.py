"""Command-line surface: report, correct, query, bench, gen.

Exit codes: 0 success, 1 degenerate-input findings, 2 usage or parse errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from . import fileio
from .bench import Algo, CorpusSpec, Family
from .brute import bf_correct_v2, bf_correct_v3
from .geom import Axis
from .region_query import QueryMode, query_edge_full, renumber_from_lowest
from .scanline import (
    DegenerateInput,
    correct_all,
    major_axis,
    report_with_metrics,
    sort_vertices,
)

EXIT_OK = 0
EXIT_DEGENERATE = 1
EXIT_USAGE = 2


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _axis_arg(poly, value: str) -> Axis:
    if value == "auto":
        return major_axis(poly)
    return Axis.X if value == "x" else Axis.Y


def _cmd_report(args) -> int:
    poly = fileio.parse_polygon(Path(args.input), args.format)
    axis = _axis_arg(poly, args.axis)
    try:
        events, metrics = report_with_metrics(poly, axis)
    except DegenerateInput as exc:
        print(f"degenerate: edges {exc.edge_i} and {exc.edge_j}")
        return EXIT_DEGENERATE
    doc = fileio.write_report(len(poly), events, metrics,
                              Path(args.json) if args.json else None)
    print(f"n={len(poly)} axis={axis.name} k={len(events)} "
          f"explored={metrics.explored}")
    if not args.json:
        print(doc)
    return EXIT_OK


def _cmd_correct(args) -> int:
    poly = fileio.parse_polygon(Path(args.input), args.format)
    try:
        if args.oracle == "scan":
            fixed, events, _ = correct_all(poly)
        elif args.oracle == "v2":
            fixed, events = bf_correct_v2(poly)
        else:
            fixed, events = bf_correct_v3(poly)
    except DegenerateInput as exc:
        print(f"degenerate: edges {exc.edge_i} and {exc.edge_j}")
        return EXIT_DEGENERATE
    fileio.write_polygon(fixed, Path(args.output), args.format)
    print(f"n={len(poly)} corrections={len(events)} -> {args.output}")
    return EXIT_OK


def _cmd_query(args) -> int:
    poly = fileio.parse_polygon(Path(args.input), args.format)
    n = len(poly)
    if not 0 <= args.edge < n:
        return _fail(f"edge {args.edge} out of range for N={n}", EXIT_USAGE)
    axis = major_axis(poly)
    so = sort_vertices(poly, axis)
    offset = so.order[0]  # renumbering rotates labels by this much
    rpoly, rso = renumber_from_lowest(poly, so)
    mode = QueryMode.STRICT if args.mode == "strict" else QueryMode.RELAXED
    res = query_edge_full(rpoly, rso, (args.edge - offset) % n, mode)
    hits = sorted((f + offset) % n for f in res.crossings)
    degen = sorted((f + offset) % n for f in res.degenerate)
    if args.higher_only:
        hits = [h for h in hits if h > args.edge]
    for h in hits:
        print(h)
    if degen:
        print(f"degenerate: edges {degen}")
        return EXIT_DEGENERATE
    return EXIT_OK


def _cmd_bench(args) -> int:
    family = Family(args.family)
    spec = CorpusSpec(family, tuple(args.sizes), tuple(args.seeds))
    algos = [Algo(a) for a in args.algos.split(",")]
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = bench_mod.run_corpus(spec, algos)
    fits = bench_mod.fit_rows(rows)
    bench_mod.write_bench_csv(rows, out / "bench.csv")
    bench_mod.write_fit_csv(fits, out / "fit.csv")
    if args.svg:
        bench_mod.write_scatter_svg(rows, fits, out / "scatter.svg")
    if Algo.CORRECT in algos:
        summary = bench_mod.backtrack_overhead_report(rows, out / "overhead.csv")
        print(f"backtrack overhead: {summary}")
    for (fam, algo), fit in sorted(fits.items()):
        print(f"{fam}/{algo}: {fit.constant:.3g} * N^{fit.exponent:.3f} "
              f"(r={fit.correlation:.3f})")
    return EXIT_OK


def _cmd_gen(args) -> int:
    poly = bench_mod.gen_polygon(Family(args.family), args.n, args.seed)
    fileio.write_polygon(poly, Path(args.output), args.format)
    print(f"wrote {args.family} N={args.n} seed={args.seed} -> {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyscan",
        description="Report and correct polygon self-intersections with a "
                    "minimal-memory scan over sorted extremities.")
    sub = parser.add_subparsers(dest="command", required=True)
    families = [f.value for f in Family]

    p = sub.add_parser("report", help="list self-intersections")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["wkt", "csv"], default=None)
    p.add_argument("--axis", choices=["auto", "x", "y"], default="auto")
    p.add_argument("--json", default=None, help="write the JSON report here")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("correct", help="untangle self-intersections")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--format", choices=["wkt", "csv"], default=None)
    p.add_argument("--oracle", choices=["scan", "v2", "v3"], default="scan")
    p.set_defaults(func=_cmd_correct)

    p = sub.add_parser("query", help="edges crossing one edge")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["wkt", "csv"], default=None)
    p.add_argument("--edge", type=int, required=True)
    p.add_argument("--mode", choices=["strict", "relaxed"], default="strict")
    p.add_argument("--higher-only", action="store_true")
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("bench", help="instrumented corpus runs and fits")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--sizes", type=int, nargs="+", required=True)
    p.add_argument("--seeds", type=int, nargs="+", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--algos", default="report,correct",
                   help="comma list of report,correct,query-strict,query-relaxed")
    p.add_argument("--svg", action="store_true", help="also write scatter.svg")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("gen", help="generate a corpus polygon")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--format", choices=["wkt", "csv"], default=None)
    p.set_defaults(func=_cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except fileio.ParseError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except (bench_mod.InvalidSpec, ValueError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    except OSError as exc:
        return _fail(str(exc), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
