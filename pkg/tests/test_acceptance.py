"""End-to-end acceptance suite.

Each test prints a single PASS/FAIL line (shown even under pytest's output
capture) so a full run doubles as an acceptance report.
"""
import json
import time

import pytest

from polyscan import (
    Algo,
    CorpusSpec,
    Family,
    Polygon,
    QueryMode,
    bf_correct_v2,
    bf_correct_v3,
    bf_query,
    bf_report,
    correct_all,
    fit_exponent,
    fit_rows,
    gen_polygon,
    is_simple,
    major_axis,
    query_edge,
    renumber_from_lowest,
    report_intersections,
    run_corpus,
    signed_area_sign,
    sort_vertices,
)
from polyscan.cli import main as cli_main
from polyscan.fileio import parse_csv, parse_wkt, write_csv, write_wkt
from polyscan.polygon import DegenerateArea

from conftest import BOWTIE, SQUARE, random_chord_polygon

SIZES_SMALL = (8, 16, 32, 64, 128, 256)


def announce(capsys, label: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    with capsys.disabled():
        print(f"[acceptance] {label}: {status}" + (f" ({detail})" if detail else ""))
    assert ok, f"{label}: {detail}"


def corpus_500():
    polys = []
    i = 0
    for family in (Family.RANDOM_STAR, Family.NOISY_CONTOUR):
        for seed in range(250):
            n = SIZES_SMALL[i % len(SIZES_SMALL)]
            polys.append((family, n, seed, gen_polygon(family, n, seed)))
            i += 1
    return polys


def query_corpus_200():
    polys = []
    i = 0
    for family in (Family.RANDOM_STAR, Family.NOISY_CONTOUR,
                   Family.WORST_CASE_FAN, Family.PERPENDICULAR_HEAVY):
        for seed in range(50):
            n = (8, 16, 24, 32, 48)[i % 5]
            polys.append((family, n, seed, gen_polygon(family, n, seed)))
            i += 1
    return polys


def test_01_report_oracle_equivalence(capsys):
    start = time.monotonic()
    failures = []
    for family, n, seed, poly in corpus_500():
        got = report_intersections(poly)
        want = bf_report(poly)
        if {e.pair for e in got} != {e.pair for e in want}:
            failures.append((family.value, n, seed))
            continue
        want_at = {e.pair: e.at for e in want}
        for ev in got:
            ref = want_at[ev.pair]
            if abs(ev.at.x - ref.x) > 1e-9 or abs(ev.at.y - ref.y) > 1e-9:
                failures.append((family.value, n, seed))
                break
    elapsed = time.monotonic() - start
    announce(capsys, "1 report oracle equivalence (500 polygons)",
             not failures and elapsed < 60,
             f"{len(failures)} mismatches, {elapsed:.1f}s")


def test_02_corrector_soundness(capsys):
    start = time.monotonic()
    failures = []
    polys = [(f.value, n, s, p) for f, n, s, p in corpus_500()]
    for family, n, seed, poly in polys:
        try:
            pre_sign = signed_area_sign(poly)
        except DegenerateArea:
            pre_sign = None
        fixed, events, metrics = correct_all(poly)
        ok = (is_simple(fixed)
              and sorted(fixed.coords()) == sorted(poly.coords())
              and metrics.n_supp == metrics.n_real - len(poly) - metrics.n_crossings
              and metrics.n_supp >= 0)
        if ok and pre_sign is not None:
            ok = signed_area_sign(fixed) is pre_sign
        if not ok:
            failures.append((family, n, seed))
    elapsed = time.monotonic() - start
    announce(capsys, "2 corrector soundness (500 polygons)",
             not failures and elapsed < 120,
             f"{len(failures)} failures, {elapsed:.1f}s")


def test_03_brute_force_correctors_and_divergence(capsys):
    failures = []
    for family, n, seed, poly in corpus_500():
        if n > 64:
            continue  # keep the O(N^2)-per-pass oracles within budget
        for corrector in (bf_correct_v2, bf_correct_v3):
            fixed, _ = corrector(poly)
            if not is_simple(fixed) or \
                    sorted(fixed.coords()) != sorted(poly.coords()):
                failures.append((family.value, n, seed, corrector.__name__))
    witness = gen_polygon(Family.RANDOM_STAR, 8, 0)
    scan_out, _, _ = correct_all(witness)
    bf_out, _ = bf_correct_v2(witness)
    diverges = (is_simple(scan_out) and is_simple(bf_out)
                and scan_out.coords() != bf_out.coords())
    announce(capsys, "3 brute-force correctors sound + divergence witness",
             not failures and diverges,
             f"{len(failures)} failures, divergence={diverges}")


def _renumbered(poly):
    so = sort_vertices(poly, major_axis(poly))
    return renumber_from_lowest(poly, so)


def test_04_strict_query_equivalence(capsys):
    bad = []
    for family, n, seed, poly in query_corpus_200():
        rp, rso = _renumbered(poly)
        for i in range(len(rp)):
            if query_edge(rp, rso, i, QueryMode.STRICT) != bf_query(rp, i):
                bad.append((family.value, n, seed, i))
    announce(capsys, "4 strict query == brute force (200 polygons, all edges)",
             not bad, f"{len(bad)} mismatched edges")


def test_05_relaxed_query_near_equivalence(capsys):
    total = 0
    disagreements = []
    for family, n, seed, poly in query_corpus_200():
        rp, rso = _renumbered(poly)
        for i in range(len(rp)):
            total += 1
            if query_edge(rp, rso, i, QueryMode.RELAXED) != \
                    query_edge(rp, rso, i, QueryMode.STRICT):
                disagreements.append((family.value, n, seed, i))
    for repro in disagreements:
        with capsys.disabled():
            print(f"[acceptance]   relaxed disagreement reproducer: "
                  f"family={repro[0]} n={repro[1]} seed={repro[2]} edge={repro[3]}")
    rate = 1.0 - len(disagreements) / total
    announce(capsys, "5 relaxed query agreement >= 99.9%",
             rate >= 0.999, f"agreement {100 * rate:.4f}% over {total} edges")


def test_06_worst_case_scaling(capsys):
    spec = CorpusSpec(Family.WORST_CASE_FAN,
                      (64, 128, 256, 512, 1024), tuple(range(20)))
    fits = fit_rows(run_corpus(spec, [Algo.REPORT]))
    fit = fits[(Family.WORST_CASE_FAN.value, Algo.REPORT.value)]
    ok = 0.85 <= fit.exponent <= 1.15
    announce(capsys, "6 worst-case explored-per-segment exponent in [0.85, 1.15]",
             ok, f"exponent {fit.exponent:.4f}, r={fit.correlation:.4f}")


def test_07_average_case_scaling(capsys):
    sizes = (64, 128, 256, 512, 1024, 2048, 4096)
    rows = []
    for family in (Family.RANDOM_STAR, Family.NOISY_CONTOUR):
        rows += run_corpus(CorpusSpec(family, sizes, tuple(range(8))),
                           [Algo.REPORT])
    points = {}
    for r in rows:
        points.setdefault(r.n, []).append(r.avg_explored)
    fit = fit_exponent([(n, sum(v) / len(v))
                        for n, v in sorted(points.items())])
    ok = 0.0 < fit.exponent <= 0.5 and fit.correlation >= 0.8
    announce(capsys, "7 average-case exponent in (0, 0.5] with r >= 0.8",
             ok, f"exponent {fit.exponent:.4f} (reference value 0.26), "
                 f"r={fit.correlation:.4f}")


def test_08_query_scaling_direction(capsys):
    spec = CorpusSpec(Family.RANDOM_STAR, (64, 128, 256, 512),
                      tuple(range(10)))
    fits = fit_rows(run_corpus(spec, [Algo.QUERY_STRICT, Algo.QUERY_RELAXED]))
    strict = fits[(Family.RANDOM_STAR.value, Algo.QUERY_STRICT.value)]
    relaxed = fits[(Family.RANDOM_STAR.value, Algo.QUERY_RELAXED.value)]
    ok = strict.exponent >= relaxed.exponent
    announce(capsys, "8 strict query exponent >= relaxed query exponent",
             ok, f"strict {strict.exponent:.4f} vs relaxed {relaxed.exponent:.4f}")


def test_09_fit_exponent_fixture(capsys):
    points = [(float(n), 2.2 * n ** 0.26)
              for n in (8, 16, 32, 64, 128, 256, 512)]
    fit = fit_exponent(points)
    ok = (abs(fit.constant - 2.2) / 2.2 <= 1e-6
          and abs(fit.exponent - 0.26) / 0.26 <= 1e-6)
    announce(capsys, "9 fit recovers 2.2 * N^0.26 within 1e-6 relative",
             ok, f"constant {fit.constant!r}, exponent {fit.exponent!r}")


def test_10_cli_round_trips(capsys, tmp_path):
    start = time.monotonic()
    ok = True
    detail = ""

    for seed in range(10):
        poly = random_chord_polygon(seed)
        if parse_wkt(write_wkt(poly)).coords() != poly.coords() or \
                parse_csv(write_csv(poly)).coords() != poly.coords():
            ok, detail = False, f"format round-trip failed for seed {seed}"

    bowtie_file = tmp_path / "bowtie.wkt"
    bowtie_file.write_text(write_wkt(Polygon.from_coords(BOWTIE)))
    out_file = tmp_path / "out.wkt"
    if cli_main(["correct", "--input", str(bowtie_file),
                 "--output", str(out_file)]) != 0 \
            or not is_simple(parse_wkt(out_file.read_text())):
        ok, detail = False, "correct subcommand"

    square_file = tmp_path / "square.csv"
    square_file.write_text(write_csv(Polygon.from_coords(SQUARE)))
    report_file = tmp_path / "r.json"
    if cli_main(["report", "--input", str(square_file), "--format", "csv",
                 "--json", str(report_file)]) != 0 \
            or json.loads(report_file.read_text())["k"] != 0:
        ok, detail = False, "report subcommand"

    if cli_main(["query", "--input", str(bowtie_file), "--edge", "0",
                 "--mode", "strict"]) != 0 \
            or capsys.readouterr().out.strip().splitlines()[-1] != "2":
        ok, detail = False, "query subcommand"

    elapsed = time.monotonic() - start
    if elapsed >= 10:
        ok, detail = False, f"smoke suite too slow: {elapsed:.1f}s"
    announce(capsys, "10 CLI round-trips and smoke suite",
             ok, detail or f"{elapsed:.1f}s")
