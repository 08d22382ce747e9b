"""Skyline geometry: canonical run representation, plane-sweep construction,
staircase extraction, and exact drop semantics.

A board has integer columns [0, board_width). A rectangle occupies the
half-open column range [x, x + width), so touching edges never collide.
The skyline of a rectangle set is the upper envelope after extending every
rectangle down to the floor; it is stored as runs (start_x, height) with
strictly increasing start_x and no equal-height neighbors, so a set of n
rectangles yields at most 2n + 1 runs.
"""

from __future__ import annotations

import heapq
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import OutOfBoardError, OverlapError

__all__ = [
    "Rect",
    "Skyline",
    "Staircase",
    "build_skyline",
    "staircases",
    "landing_height",
    "apply_drop",
    "canonicalize_runs",
    "run_spans",
]

Run = tuple[int, int]  # (start_x, height)


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle with integer coordinates, bottom edge at y."""

    x: int
    y: int
    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise OutOfBoardError(f"degenerate rectangle {self}")
        if self.x < 0 or self.y < 0:
            raise OutOfBoardError(f"rectangle {self} extends below/left of the board")

    @property
    def top(self) -> int:
        return self.y + self.height

    @property
    def x_end(self) -> int:
        return self.x + self.width


@dataclass(frozen=True)
class Skyline:
    """Canonical piecewise-constant height function over [0, board_width)."""

    board_width: int
    runs: tuple[Run, ...]

    def height_at(self, c: int) -> int:
        """Height of the column containing c."""
        if not 0 <= c < self.board_width:
            raise OutOfBoardError(f"column {c} outside [0, {self.board_width})")
        i = bisect_right(self.runs, (c, float("inf"))) - 1
        return self.runs[i][1]

    def heights(self) -> list[int]:
        """Explicit per-column heights (test/debug helper; O(board_width))."""
        out = []
        for (x, h), (x_next, _) in zip(self.runs, self.runs[1:] + ((self.board_width, 0),)):
            out.extend([h] * (x_next - x))
        return out

    @property
    def max_height(self) -> int:
        return max(h for _, h in self.runs)


@dataclass(frozen=True)
class Staircase:
    """Walls of a skyline visible from one side, in left-to-right order.

    Left staircase: steps at the left edge of each strict prefix-maximum
    run; heights strictly increase. Right staircase: steps at the right
    edge of each strict suffix-maximum run; heights strictly decrease.
    """

    side: str  # "left" | "right"
    steps: tuple[tuple[int, int], ...]  # (x, height)


def canonicalize_runs(runs: Iterable[Run]) -> list[Run]:
    """Drop zero-width and equal-height-neighbor runs."""
    out: list[Run] = []
    for x, h in runs:
        if out and out[-1][0] == x:
            out.pop()  # zero-width run superseded by this one
        if out and out[-1][1] == h:
            continue
        out.append((x, h))
    return out


def run_spans(runs: Sequence[Run], end_x: int):
    """Yield (start, end, height) for each run, closed by end_x."""
    for i, (x, h) in enumerate(runs):
        nxt = runs[i + 1][0] if i + 1 < len(runs) else end_x
        yield x, nxt, h


def _check_rects(rects: Sequence[Rect], board_width: int) -> None:
    """Reject out-of-board rectangles and intersecting interiors.

    Plane sweep over x keeping active y-intervals sorted by start; since
    active intervals stay pairwise disjoint, only the two bisect
    neighbors of a new interval can overlap it.
    """
    events = []  # (x, is_open, y0, y1); closes sort before opens at equal x
    for r in rects:
        if r.x_end > board_width:
            raise OutOfBoardError(f"rectangle {r} outside board of width {board_width}")
        events.append((r.x, 1, r.y, r.top))
        events.append((r.x_end, 0, r.y, r.top))
    events.sort()
    active: list[tuple[int, int]] = []
    for x, is_open, y0, y1 in events:
        if not is_open:
            active.remove((y0, y1))
            continue
        i = bisect_right(active, (y0, y1))
        if i > 0 and active[i - 1][1] > y0:
            raise OverlapError(f"rectangles overlap near x={x}, y={y0}")
        if i < len(active) and active[i][0] < y1:
            raise OverlapError(f"rectangles overlap near x={x}, y={active[i][0]}")
        active.insert(i, (y0, y1))


def build_skyline(rects: Iterable[Rect], board_width: int, validate: bool = True) -> Skyline:
    """Upper envelope of the rectangles, by plane sweep in O(n log n).

    With validate=True (default) also rejects overlapping interiors and
    out-of-board rectangles; pass False when the input is known-good and
    the O(n log n) check is unwelcome.
    """
    if board_width < 1:
        raise OutOfBoardError(f"board width must be >= 1, got {board_width}")
    rects = list(rects)
    if validate:
        _check_rects(rects, board_width)
    else:
        for r in rects:
            if r.x_end > board_width:
                raise OutOfBoardError(f"rectangle {r} outside board of width {board_width}")

    events: dict[int, list[tuple[int, int]]] = {}
    for r in rects:
        events.setdefault(r.x, []).append((1, r.top))
        events.setdefault(r.x_end, []).append((-1, r.top))

    heap: list[int] = []  # max-heap of active tops (negated), lazy deletion
    dead: dict[int, int] = {}
    runs: list[Run] = []
    cur = -1
    for x in sorted(events):
        for kind, top in events[x]:
            if kind == 1:
                heapq.heappush(heap, -top)
            else:
                dead[top] = dead.get(top, 0) + 1
        if x >= board_width:  # closes at the wall produce no run
            continue
        while heap and dead.get(-heap[0], 0):
            dead[-heap[0]] -= 1
            heapq.heappop(heap)
        h = -heap[0] if heap else 0
        if h != cur:
            runs.append((x, h))
            cur = h
    if not runs or runs[0][0] != 0:
        runs.insert(0, (0, 0))
    return Skyline(board_width, tuple(canonicalize_runs(runs)))


def staircases(sky: Skyline) -> tuple[Staircase, Staircase]:
    """Left and right staircases of a canonical skyline.

    Step x-coordinates follow the wall they expose: run start for the
    left staircase, run end for the right one (so the final ground-level
    step of the right staircase sits on the board edge).
    """
    left = []
    best = -1
    for x, h in sky.runs:
        if h > best:
            left.append((x, h))
            best = h
    right = []
    best = -1
    for x, end, h in reversed(list(run_spans(sky.runs, sky.board_width))):
        if h > best:
            right.append((end, h))
            best = h
    right.reverse()
    return Staircase("left", tuple(left)), Staircase("right", tuple(right))


def _runs_max(runs: Sequence[Run], board_width: int, x0: int, x1: int) -> int:
    """Max run height over columns [x0, x1)."""
    i = bisect_right(runs, (x0, float("inf"))) - 1
    best = 0
    for j in range(i, len(runs)):
        x, h = runs[j]
        if x >= x1:
            break
        if h > best:
            best = h
    return best


def landing_height(sky: Skyline, x_d: int, width: int) -> int:
    """Height a width-`width` rectangle dropped at x_d would land on."""
    if width < 1:
        raise OutOfBoardError(f"rect width must be >= 1, got {width}")
    if x_d < 0 or x_d + width > sky.board_width:
        raise OutOfBoardError(
            f"footprint [{x_d}, {x_d + width}) outside board [0, {sky.board_width})"
        )
    return _runs_max(sky.runs, sky.board_width, x_d, x_d + width)


def apply_drop(sky: Skyline, rect_width: int, rect_height: int, x_d: int) -> tuple[Skyline, int]:
    """Drop a rectangle at x_d; returns the new skyline and the landing height."""
    if rect_height < 1:
        raise OutOfBoardError(f"rect height must be >= 1, got {rect_height}")
    landing = landing_height(sky, x_d, rect_width)
    x_end = x_d + rect_width
    top = landing + rect_height

    new_runs: list[Run] = []
    trailing: Run | None = None
    for x, end, h in run_spans(sky.runs, sky.board_width):
        if x < x_d:
            new_runs.append((x, h))
        if x < x_end < end:
            trailing = (x_end, h)  # partial run survives right of the footprint
    new_runs.append((x_d, top))
    if trailing is not None:
        new_runs.append(trailing)
    for x, h in sky.runs:
        if x >= x_end:
            new_runs.append((x, h))
    return Skyline(sky.board_width, tuple(canonicalize_runs(new_runs))), landing
