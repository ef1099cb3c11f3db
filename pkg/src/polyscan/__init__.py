"""Minimal-memory detection and correction of polygon self-intersections."""

from .geom import (
    Axis,
    CrossType,
    Crossing,
    Point,
    Segment,
    interval_overlap,
    orientation_sign,
    segment_cross,
)
from .polygon import (
    DegenerateArea,
    NotACrossing,
    Orientation,
    Polygon,
    correct_crossing,
    is_simple,
    reverse_range,
    signed_area_sign,
)
from .scanline import (
    DegenerateInput,
    IntersectionEvent,
    NonTermination,
    RunMetrics,
    ScanState,
    SortedOrder,
    correct_all,
    major_axis,
    report_intersections,
    report_with_metrics,
    resort_after_reversal,
    sort_vertices,
    upward_segments,
)
from .brute import bf_correct_v2, bf_correct_v3, bf_query, bf_report
from .bench import (
    Algo,
    BenchRow,
    CorpusSpec,
    Family,
    FitResult,
    InsufficientData,
    InvalidSpec,
    fit_exponent,
    fit_rows,
    gen_polygon,
    run_corpus,
    run_instrumented,
)
from .region_query import (
    QueryFrame,
    QueryMode,
    QueryResult,
    SectionTracker,
    query_edge,
    query_edge_full,
    query_explored_count,
    renumber_from_lowest,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
