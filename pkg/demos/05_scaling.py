#!/usr/bin/env python3
"""Seeing the square root.

Per-move cost of the chunked board against the linear column oracle as
the board grows: on a log-log plot the chunked structure should climb
with slope about 1/2, the oracle with slope about 1. This demo uses
small sizes so it finishes in well under a minute; pass bigger sizes to
`rectdrop bench` for the full picture.
Run with: python3 demos/05_scaling.py
"""

from rectdrop.bench import fit_slope, run_bench, rows_to_csv, series


def main():
    sizes = [2**e for e in range(12, 17)]
    rows = run_bench(sizes, dist="uniform", seed=1, queries=64, updates=48)
    print(rows_to_csv(rows))
    for op in ("query", "oracle_query", "update", "build"):
        pts = series(rows, op)
        print(f"log-log slope of {op:<13}: {fit_slope(pts):.2f}")
    print("\n(expect query near 0.5, oracle_query near 1, build near 1)")


if __name__ == "__main__":
    main()
