"""Microbenchmarks probing the scaling claims.

Per board size n the harness builds a board whose skyline really has
Theta(n) runs, then times bulk construction, greedy queries, drops, and
the column-scan oracle on identical workloads. Scaling acceptance uses
log-log slopes fitted across sizes, never absolute times, so results are
machine independent: the chunked structure should sit near slope 1/2,
the column oracle near 1, construction near 1.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

import numpy as np

from .geometry import Rect
from .multiphase import build_phase1
from .oracle import ColumnBoard
from .rdds import bulk_build

__all__ = ["BenchRow", "run_bench", "fit_slope", "rows_to_csv", "DISTRIBUTIONS"]

DISTRIBUTIONS = ("uniform", "funnel", "zipf")
_WARMUP = 8


@dataclass
class BenchRow:
    n: int
    op: str
    mean_ns: float
    p99_ns: float
    chunks: int


def _layered_rects(rng: random.Random, n: int) -> tuple[list[Rect], int]:
    """n disjoint floor rects with gaps: a skyline of ~2n runs."""
    rects, x = [], 0
    for _ in range(n):
        w = rng.randint(1, 3)
        rects.append(Rect(x, 0, w, rng.randint(1, 1 << 20)))
        x += w + rng.randint(1, 2)
    return rects, x + 1


def _funnel_rects(rng: random.Random, n: int) -> tuple[list[Rect], int]:
    """A funnel board with ~n rects (all funnel pieces rest on the floor)."""
    k = max(1, math.isqrt(n))
    m = max(1, n // k)
    F = tuple(
        frozenset(j for j in range(1, m + 1) if rng.random() < 0.5) or frozenset({1})
        for _ in range(k)
    )
    width, ops = build_phase1(m, k, F)
    return [Rect(x, 0, w, h) for w, h, x in ops], width


def _make_state(n: int, dist: str, seed: int):
    rng = random.Random((seed << 20) ^ n)
    if dist == "funnel":
        rects, width = _funnel_rects(rng, n)
        qmax = max(2, math.isqrt(n) + 1)
    else:
        rects, width = _layered_rects(rng, n)
        qmax = max(2, width // 8)
    rdds = bulk_build(rects, width, validate=False)
    board = ColumnBoard(width)
    for r in rects:
        np.maximum(board.heights[r.x : r.x + r.width], r.top,
                   out=board.heights[r.x : r.x + r.width])
    if dist == "zipf":
        gen = np.random.default_rng(seed ^ n)
        widths = [int(min(qmax, 1 + w)) for w in gen.zipf(1.5, size=4096)]
    else:
        widths = [rng.randint(1, qmax) for _ in range(4096)]
    return rects, rdds, board, width, widths


def _time_each(fn, args_list) -> tuple[float, float]:
    """(mean_ns, p99_ns) of fn over the argument list."""
    for args in args_list[:_WARMUP]:
        fn(*args)
    samples = []
    for args in args_list:
        t0 = time.perf_counter_ns()
        fn(*args)
        samples.append(time.perf_counter_ns() - t0)
    arr = np.array(samples, dtype=np.float64)
    return float(arr.mean()), float(np.percentile(arr, 99))


def run_bench(
    sizes,
    dist: str = "uniform",
    seed: int = 0,
    queries: int = 96,
    updates: int = 96,
    include_oracle: bool = True,
) -> list[BenchRow]:
    if dist not in DISTRIBUTIONS:
        raise ValueError(f"unknown distribution {dist!r}; pick one of {DISTRIBUTIONS}")
    rows: list[BenchRow] = []
    for n in sizes:
        rng = random.Random(seed ^ (n * 7919))
        rects, rdds, board, width, widths = _make_state(n, dist, seed)
        chunks = len(rdds.chunks)

        t0 = time.perf_counter_ns()
        bulk_build(rects, width, validate=False)
        build_ns = time.perf_counter_ns() - t0
        rows.append(BenchRow(n, "build", float(build_ns), float(build_ns), chunks))

        q_args = [(widths[i % len(widths)], rng.randint(1, 8)) for i in range(queries)]
        mean, p99 = _time_each(rdds.query, q_args)
        rows.append(BenchRow(n, "query", mean, p99, chunks))

        if include_oracle:
            mean, p99 = _time_each(lambda w, _h: board.best(w), q_args)
            rows.append(BenchRow(n, "oracle_query", mean, p99, chunks))

        u_args = []
        for _ in range(updates):
            w = rng.randint(1, 8)  # small pieces keep the run count stable
            u_args.append((w, rng.randint(1, 8), rng.randint(0, width - w)))
        mean, p99 = _time_each(rdds.update, u_args)
        rows.append(BenchRow(n, "update", mean, p99, len(rdds.chunks)))
    return rows


def fit_slope(points) -> float:
    """Least-squares slope of log2(time) against log2(n)."""
    xs = np.log2([n for n, _ in points])
    ys = np.log2([t for _, t in points])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def series(rows: list[BenchRow], op: str) -> list[tuple[int, float]]:
    return [(r.n, r.mean_ns) for r in rows if r.op == op]


def rows_to_csv(rows: list[BenchRow]) -> str:
    out = ["n,op,mean_ns,p99_ns,chunks"]
    for r in rows:
        out.append(f"{r.n},{r.op},{r.mean_ns:.0f},{r.p99_ns:.0f},{r.chunks}")
    return "\n".join(out) + "\n"
