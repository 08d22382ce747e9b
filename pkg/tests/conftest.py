"""Shared brute-force oracles and random-state generators.

Oracles here work on explicit per-column height arrays and stay
deliberately independent of the library's run-based code paths.
"""

from __future__ import annotations

import random

import pytest

from rectdrop.geometry import Rect
from rectdrop.height_index import SENTINEL_HEIGHT, Slot


def column_heights(rects, board_width: int) -> list[int]:
    """Per-column max rectangle top; the definitional skyline."""
    heights = [0] * board_width
    for r in rects:
        for c in range(r.x, r.x + r.width):
            if r.top > heights[c]:
                heights[c] = r.top
    return heights


def rle(heights) -> tuple[tuple[int, int], ...]:
    """Run-length encode per-column heights into canonical runs."""
    runs = []
    for c, h in enumerate(heights):
        if not runs or runs[-1][1] != h:
            runs.append((c, h))
    return tuple(runs) if runs else ((0, 0),)


def visible_walls_left(heights) -> list[tuple[int, int]]:
    """Steps visible from (-inf, 0): first column of each new running max."""
    steps = []
    best = -1
    for c, h in enumerate(heights):
        if h > best:
            steps.append((c, h))
            best = h
    return steps


def visible_walls_right(heights) -> list[tuple[int, int]]:
    """Steps visible from (+inf, 0), at the right edge of the visible column."""
    steps = []
    best = -1
    for c in range(len(heights) - 1, -1, -1):
        if heights[c] > best:
            steps.append((c + 1, heights[c]))
            best = heights[c]
    steps.reverse()
    return steps


def widest_gap_at(heights, h: int) -> Slot:
    """Leftmost widest maximal stretch of columns at or below h."""
    best = Slot(0, 0, 0)
    c = 0
    n = len(heights)
    while c < n:
        if heights[c] > h:
            c += 1
            continue
        start = c
        floor = 0
        while c < n and heights[c] <= h:
            if heights[c] > floor:
                floor = heights[c]
            c += 1
        if c - start > best.width:
            best = Slot(start, c - start, floor)
    return best


def blocker_oracle(runs, end_x: int) -> dict[int, Slot]:
    """Per run-height widest slot, by rescanning the runs for each height.

    O(V^2); sentinel-height runs block forever and contribute no entry.
    """
    spans = []
    for i, (x, h) in enumerate(runs):
        nxt = runs[i + 1][0] if i + 1 < len(runs) else end_x
        spans.append((x, nxt, h))
    out = {}
    for v in sorted({h for _, _, h in spans if h != SENTINEL_HEIGHT}):
        best = Slot(0, 0, 0)
        i = 0
        while i < len(spans):
            if spans[i][2] > v:
                i += 1
                continue
            j = i
            floor = 0
            while j < len(spans) and spans[j][2] <= v:
                floor = max(floor, spans[j][2])
                j += 1
            width = spans[j - 1][1] - spans[i][0]
            if width > best.width:
                best = Slot(spans[i][0], width, floor)
            i = j
        out[v] = best
    return out


def random_dropped_rects(rng: random.Random, n: int, board_width: int,
                         max_w: int | None = None, max_h: int = 8) -> list[Rect]:
    """Pairwise-independent rectangles, generated by simulating drops."""
    max_w = max_w or max(1, board_width // 3)
    heights = [0] * board_width
    rects = []
    for _ in range(n):
        w = rng.randint(1, min(max_w, board_width))
        h = rng.randint(1, max_h)
        x = rng.randint(0, board_width - w)
        landing = max(heights[x : x + w])
        rects.append(Rect(x, landing, w, h))
        for c in range(x, x + w):
            heights[c] = landing + h
    return rects


def random_runs(rng: random.Random, n_runs: int, board_width: int,
                max_h: int = 12) -> tuple[tuple[int, int], ...]:
    """A canonical random run list over [0, board_width)."""
    n_runs = min(n_runs, board_width)
    starts = sorted(rng.sample(range(1, board_width), n_runs - 1)) if n_runs > 1 else []
    starts = [0] + starts
    runs = []
    prev = None
    for x in starts:
        h = rng.randint(0, max_h)
        while h == prev:
            h = rng.randint(0, max_h)
        runs.append((x, h))
        prev = h
    return tuple(runs)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
