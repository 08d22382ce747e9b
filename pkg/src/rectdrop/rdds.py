"""Chunked rectangle-dropping board with sublinear queries and updates.

The global skyline (with one sentinel wall run beyond each board edge) is
kept as an ordered list of chunks of roughly sqrt(n log n) runs each. A
chunk owns a contiguous run range and carries its own widest-slot index,
its left/right staircases, and its max run height. Greedy placement then
splits into two candidate families:

* slots interior to one chunk, answered by that chunk's index;
* slots crossing chunk boundaries, found by a two-cursor sliding window
  over the chunk list plus binary searches in the boundary staircases.

A drop rebuilds only the chunks its footprint touches. Chunk sizes are
kept within [S, 2S]-ish bounds (every chunk at most 2S runs, every
adjacent pair at least S combined) by splitting and merging locally; the
chunk parameter S is refreshed by a full repartition whenever the
rectangle count doubles.

Heights only ever grow and rows never clear, so the candidate landing
heights are exactly the current run heights plus 0; a whole-rectangle
query binary-searches that multiset for the lowest feasible level.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from sortedcontainers import SortedList

from .errors import OutOfBoardError, WidthExceedsBoardError
from .geometry import Rect, Run, Skyline, build_skyline, canonicalize_runs
from .height_index import (
    EMPTY_SLOT,
    SENTINEL_HEIGHT,
    HeightIndex,
    Slot,
    build_height_index_runs,
)

__all__ = ["RDDS", "Chunk", "GreedyMove", "new_rdds", "bulk_build"]

_MIN_REBUILD_N = 4


class GreedyMove(NamedTuple):
    """Answer to "where would this rectangle end up lowest?"."""

    x_d: int
    landing_y: int
    resulting_max: int


class Chunk:
    """Immutable contiguous piece of the global skyline."""

    __slots__ = ("runs", "end_x", "idx", "left_xs", "left_hs", "right_xs", "right_hs", "max_h")

    def __init__(self, runs: Sequence[Run], end_x: int):
        self.runs = tuple(runs)
        self.end_x = end_x
        self.idx: HeightIndex = build_height_index_runs(self.runs, end_x)
        left_xs: list[int] = []
        left_hs: list[int] = []
        best = -1
        for x, h in self.runs:
            if h > best:
                left_xs.append(x)
                left_hs.append(h)
                best = h
        right_xs: list[int] = []
        right_hs: list[int] = []
        best = -1
        for i in range(len(self.runs) - 1, -1, -1):
            x, h = self.runs[i]
            if h > best:
                end = self.runs[i + 1][0] if i + 1 < len(self.runs) else end_x
                right_xs.append(end)
                right_hs.append(h)
                best = h
        right_xs.reverse()
        right_hs.reverse()
        self.left_xs, self.left_hs = tuple(left_xs), tuple(left_hs)
        self.right_xs, self.right_hs = tuple(right_xs), tuple(right_hs)
        self.max_h = max((h for _, h in self.runs if h != SENTINEL_HEIGHT), default=0)

    @property
    def start_x(self) -> int:
        return self.runs[0][0]

    @property
    def size(self) -> int:
        return len(self.runs)

    # -- staircase searches ------------------------------------------------

    def rightmost_above(self, h: int) -> tuple[int, int]:
        """(right edge of the last wall strictly above h, max height right of it).

        Requires such a wall to exist (a sentinel or max_h > h).
        """
        hs = self.right_hs  # strictly decreasing
        lo, hi = 0, len(hs)
        while lo < hi:
            mid = (lo + hi) // 2
            if hs[mid] > h:
                lo = mid + 1
            else:
                hi = mid
        tail_max = hs[lo] if lo < len(hs) else 0
        return self.right_xs[lo - 1], tail_max

    def leftmost_above(self, h: int) -> tuple[int, int]:
        """(left edge of the first wall strictly above h, max height left of it)."""
        i = bisect_right(self.left_hs, h)  # strictly increasing heights
        head_max = self.left_hs[i - 1] if i > 0 else 0
        return self.left_xs[i], head_max

    def suffix_max(self, from_x: int) -> int:
        """Max run height over columns [from_x, end_x)."""
        i = bisect_right(self.right_xs, from_x)
        return self.right_hs[i]

    def prefix_max(self, to_x: int) -> int:
        """Max run height over columns [start_x, to_x)."""
        i = bisect_left(self.left_xs, to_x) - 1
        return self.left_hs[i]

    def range_max(self, x0: int, x1: int) -> int:
        """Max run height over columns [x0, x1) inside this chunk."""
        i = bisect_right(self.runs, (x0, SENTINEL_HEIGHT + 1)) - 1
        best = 0
        for j in range(i, len(self.runs)):
            x, h = self.runs[j]
            if x >= x1:
                break
            if h > best:
                best = h
        return best

    def real_heights(self) -> list[int]:
        return [h for _, h in self.runs if h != SENTINEL_HEIGHT]


@lru_cache(maxsize=1 << 15)
def _cached_chunk(runs: tuple[Run, ...], end_x: int) -> Chunk:
    return Chunk(runs, end_x)


def _make_chunk(runs: Sequence[Run], end_x: int) -> Chunk:
    # Chunks are immutable, so small ones (tiny boards, repeated local
    # patterns) are shared through a bounded cache; hashing large run
    # tuples would cost more than it saves.
    runs = tuple(runs)
    if len(runs) <= 64:
        return _cached_chunk(runs, end_x)
    return Chunk(runs, end_x)


def _chunk_param(n_rects: int) -> int:
    n = max(n_rects, 2)
    return max(2, math.isqrt(n * max(1, math.ceil(math.log2(n)))))


def _partition_sizes(total: int, cap: int) -> list[int]:
    """Split `total` into near-equal parts of at most `cap` each."""
    k = max(1, -(-total // cap))
    base, extra = divmod(total, k)
    return [base + (1 if i < extra else 0) for i in range(k)]


class RDDS:
    """Board state plus the chunked index machinery.

    Single writer: `update` is the only mutating operation, everything
    else is observationally pure. Queries may run concurrently with each
    other but must be externally serialized against updates.
    """

    def __init__(self, board_width: int):
        if board_width < 1:
            raise OutOfBoardError(f"board width must be >= 1, got {board_width}")
        self.board_width = board_width
        self.n_rects = 0
        self.global_max = 0
        self.last_landing = 0
        self.S = _chunk_param(0)
        self._n_at_repartition = 0
        self._height_count: dict[int, int] = {0: 1}  # 0 is always a candidate
        self._distinct = SortedList([0])
        self.stats = {"updates": 0, "last_update_rebuilds": 0, "repartitions": 0,
                      "last_update_scheduled": False}
        runs = [(-1, SENTINEL_HEIGHT), (0, 0), (board_width, SENTINEL_HEIGHT)]
        self.chunks: list[Chunk] = []
        self._chunk_starts: list[int] = []
        self._install(self._make_chunks(runs, board_width + 1))
        self._heights_add(runs)

    # -- bookkeeping ---------------------------------------------------------

    def _heights_add(self, runs: Iterable[Run]) -> None:
        for _, h in runs:
            if h == SENTINEL_HEIGHT:
                continue
            c = self._height_count.get(h, 0)
            if c == 0:
                self._distinct.add(h)
            self._height_count[h] = c + 1

    def _heights_remove(self, runs: Iterable[Run]) -> None:
        for _, h in runs:
            if h == SENTINEL_HEIGHT:
                continue
            c = self._height_count[h] - 1
            if c == 0:
                del self._height_count[h]
                self._distinct.remove(h)
            else:
                self._height_count[h] = c

    def _make_chunks(self, runs: Sequence[Run], region_end: int) -> list[Chunk]:
        parts: list[Chunk] = []
        pos = 0
        sizes = _partition_sizes(len(runs), 2 * self.S)
        for i, size in enumerate(sizes):
            part = tuple(runs[pos : pos + size])
            pos += size
            end = runs[pos][0] if pos < len(runs) else region_end
            parts.append(_make_chunk(part, end))
        return parts

    def _install(self, chunks: list[Chunk]) -> None:
        self.chunks = chunks
        self._chunk_starts = [c.start_x for c in chunks]

    def _chunk_index_for(self, column: int) -> int:
        return bisect_right(self._chunk_starts, column) - 1

    def _all_runs(self) -> list[Run]:
        out: list[Run] = []
        for c in self.chunks:
            out.extend(c.runs)
        return out

    def _repartition(self) -> None:
        runs = self._all_runs()
        self.S = _chunk_param(self.n_rects)
        self._install(self._make_chunks(runs, self.board_width + 1))
        self._n_at_repartition = self.n_rects
        self.stats["repartitions"] += 1

    # -- queries ---------------------------------------------------------

    def query_by_height(self, h: int) -> Slot:
        """Widest slot whose floor is at or below h, leftmost on ties."""
        if h < 0:
            raise OutOfBoardError(f"query height must be >= 0, got {h}")
        best = EMPTY_SLOT
        for chunk in self.chunks:
            s = chunk.idx.widest_at_or_below(h)
            if s.width > best.width or (s.width == best.width and s.width and s.x < best.x):
                best = s

        chunks = self.chunks
        last = len(chunks) - 1
        p1 = 0
        while p1 < last:
            p2 = p1 + 1
            passable_max = 0
            while p2 < last and chunks[p2].max_h <= h:
                if chunks[p2].max_h > passable_max:
                    passable_max = chunks[p2].max_h
                p2 += 1
            left_edge, tail_max = chunks[p1].rightmost_above(h)
            right_edge, head_max = chunks[p2].leftmost_above(h)
            width = right_edge - left_edge
            if width > best.width or (width == best.width and width and left_edge < best.x):
                best = Slot(left_edge, width, max(tail_max, passable_max, head_max))
            p1 = p2
        return best

    def query(self, width: int, height: int) -> GreedyMove:
        """Lowest-landing drop position for a width x height rectangle.

        Pure: binary search over the candidate landing heights (the
        current run heights plus 0) for the lowest level with a wide
        enough slot.
        """
        if width > self.board_width:
            raise WidthExceedsBoardError(
                f"rect width {width} exceeds board width {self.board_width}"
            )
        if width < 1 or height < 1:
            raise OutOfBoardError(f"rect sides must be >= 1, got {width}x{height}")
        d = self._distinct
        lo, hi = 0, len(d) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if self.query_by_height(d[mid]).width >= width:
                hi = mid
            else:
                lo = mid + 1
        h_star = d[lo]
        slot = self.query_by_height(h_star)
        return GreedyMove(slot.x, h_star, max(self.global_max, h_star + height))

    def snapshot(self) -> Skyline:
        """Current global skyline, sentinels stripped."""
        runs = tuple(r for r in self._all_runs() if r[1] != SENTINEL_HEIGHT)
        return Skyline(self.board_width, runs)

    # -- update ---------------------------------------------------------

    def _landing(self, x_d: int, x_end: int, i: int, j: int) -> int:
        if i == j:
            return self.chunks[i].range_max(x_d, x_end)
        landing = max(
            self.chunks[i].suffix_max(x_d),
            self.chunks[j].prefix_max(x_end),
        )
        for k in range(i + 1, j):
            if self.chunks[k].max_h > landing:
                landing = self.chunks[k].max_h
        return landing

    def update(self, width: int, height: int, x_d: int) -> int:
        """Drop a rectangle with its left border at x_d; returns the new max."""
        if width < 1 or height < 1:
            raise OutOfBoardError(f"rect sides must be >= 1, got {width}x{height}")
        if x_d < 0 or x_d + width > self.board_width:
            raise OutOfBoardError(
                f"footprint [{x_d}, {x_d + width}) outside board [0, {self.board_width})"
            )
        x_end = x_d + width
        lo = self._chunk_index_for(x_d)
        hi = self._chunk_index_for(x_end - 1)
        landing = self._landing(x_d, x_end, lo, hi)
        top = landing + height
        if top >= SENTINEL_HEIGHT:
            raise OutOfBoardError("stack height reaches the sentinel wall limit")

        dirty: list[Run] = [r for r in self.chunks[lo].runs if r[0] < x_d]
        dirty.append((x_d, top))
        tail_chunk = self.chunks[hi]
        for k, (x, h) in enumerate(tail_chunk.runs):
            end = tail_chunk.runs[k + 1][0] if k + 1 < tail_chunk.size else tail_chunk.end_x
            if x < x_end < end:
                dirty.append((x_end, h))
            elif x >= x_end:
                dirty.append((x, h))
        dirty = canonicalize_runs(dirty)

        # Absorb a neighbor whose junction run would break canonical form.
        if lo > 0 and self.chunks[lo - 1].runs[-1][1] == dirty[0][1]:
            lo -= 1
            dirty = canonicalize_runs(list(self.chunks[lo].runs) + dirty)
        if hi < len(self.chunks) - 1 and self.chunks[hi + 1].runs[0][1] == dirty[-1][1]:
            hi += 1
            dirty = canonicalize_runs(dirty + list(self.chunks[hi].runs))

        # Absorb neighbors that would violate the pairwise size floor.
        sizes = _partition_sizes(len(dirty), 2 * self.S)
        while lo > 0 and sizes[0] + self.chunks[lo - 1].size < self.S:
            lo -= 1
            dirty = list(self.chunks[lo].runs) + dirty
            sizes = _partition_sizes(len(dirty), 2 * self.S)
        while hi < len(self.chunks) - 1 and sizes[-1] + self.chunks[hi + 1].size < self.S:
            hi += 1
            dirty = dirty + list(self.chunks[hi].runs)
            sizes = _partition_sizes(len(dirty), 2 * self.S)

        region_end = self.chunks[hi].end_x
        for k in range(lo, hi + 1):
            self._heights_remove(self.chunks[k].runs)
        parts = self._make_chunks(dirty, region_end)
        for part in parts:
            self._heights_add(part.runs)
        self.chunks[lo : hi + 1] = parts
        self._chunk_starts = [c.start_x for c in self.chunks]

        self.n_rects += 1
        self.last_landing = landing
        if top > self.global_max:
            self.global_max = top
        self.stats["updates"] += 1
        self.stats["last_update_rebuilds"] = len(parts)
        scheduled = self.n_rects >= 2 * max(self._n_at_repartition, _MIN_REBUILD_N)
        self.stats["last_update_scheduled"] = scheduled
        if scheduled:
            self._repartition()
        return self.global_max

    # -- helpers ---------------------------------------------------------

    def clone(self) -> "RDDS":
        """Independent copy; chunks are immutable and shared."""
        dup = object.__new__(RDDS)
        dup.board_width = self.board_width
        dup.n_rects = self.n_rects
        dup.global_max = self.global_max
        dup.last_landing = self.last_landing
        dup.S = self.S
        dup._n_at_repartition = self._n_at_repartition
        dup._height_count = dict(self._height_count)
        dup._distinct = SortedList(self._distinct)
        dup.stats = dict(self.stats)
        dup.chunks = list(self.chunks)
        dup._chunk_starts = list(self._chunk_starts)
        return dup

    def check_invariants(self) -> None:
        """Raise AssertionError if any structural invariant is broken."""
        assert self.chunks, "no chunks"
        runs = self._all_runs()
        assert runs[0] == (-1, SENTINEL_HEIGHT) and runs[-1] == (self.board_width, SENTINEL_HEIGHT)
        for a, b in zip(runs, runs[1:]):
            assert a[0] < b[0], f"run starts not increasing: {a} {b}"
            assert a[1] != b[1], f"equal-height neighbors: {a} {b}"
        for c, nxt in zip(self.chunks, self.chunks[1:]):
            assert c.end_x == nxt.start_x, "chunk spans do not tile"
        assert self.chunks[-1].end_x == self.board_width + 1
        for c in self.chunks:
            assert c.size <= 2 * self.S, f"chunk size {c.size} > 2S={2 * self.S}"
            hs = c.left_hs
            assert all(a < b for a, b in zip(hs, hs[1:])), "left staircase not increasing"
            assert all(a > b for a, b in zip(c.right_hs, c.right_hs[1:])), \
                "right staircase not decreasing"
        for c, nxt in zip(self.chunks, self.chunks[1:]):
            assert c.size + nxt.size >= self.S, \
                f"adjacent chunks too small: {c.size}+{nxt.size} < S={self.S}"
        expect: dict[int, int] = {0: 1}
        for _, h in runs:
            if h != SENTINEL_HEIGHT:
                expect[h] = expect.get(h, 0) + 1
        assert expect == self._height_count, "height multiset out of sync"
        assert list(self._distinct) == sorted(expect), "distinct heights out of sync"
        real = [h for _, h in runs if h != SENTINEL_HEIGHT]
        assert self.global_max == max(real), "global max out of sync"
        assert len(real) <= 2 * self.n_rects + 1, "run count exceeds 2n+1"


def new_rdds(board_width: int) -> RDDS:
    """Empty board between walls at x=0 and x=board_width."""
    return RDDS(board_width)


def bulk_build(rects: Iterable[Rect], board_width: int, validate: bool = True) -> RDDS:
    """Build from an existing rectangle set in O(n log n)."""
    rects = list(rects)
    sky = build_skyline(rects, board_width, validate=validate)
    if sky.max_height >= SENTINEL_HEIGHT:
        raise OutOfBoardError("rectangle tops reach the sentinel wall limit")
    rdds = RDDS(board_width)
    runs = [(-1, SENTINEL_HEIGHT), *sky.runs, (board_width, SENTINEL_HEIGHT)]
    rdds.n_rects = len(rects)
    rdds._n_at_repartition = rdds.n_rects
    rdds.S = _chunk_param(rdds.n_rects)
    rdds._height_count = {0: 1}
    rdds._distinct = SortedList([0])
    rdds._heights_add(runs)
    rdds.global_max = sky.max_height
    rdds._install(rdds._make_chunks(runs, board_width + 1))
    return rdds
