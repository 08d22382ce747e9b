"""Widest-droppable-slot index over a skyline fragment.

For every height h that occurs as a run height, the index stores the
widest maximal gap whose columns all sit at or below h, i.e. the widest
rectangle footprint that could be dropped to rest at or below h inside
the fragment. An arbitrary query height then resolves by binary search
to the largest stored height not above it, because the set of blocking
columns only changes when h crosses a run height.

Construction processes run heights in ascending order and unions each
newly passable run with its already-passable neighbors, tracking the
extent and floor of every merged gap. Gaps only ever grow, so a running
(widest, then leftmost) champion recorded after each height finishes
yields the per-height answers in O(V log V) overall, dominated by the
sort. Sentinel wall runs (height SENTINEL_HEIGHT) never become passable:
they shape gaps as permanent blockers but contribute no entries and no
floors. The fragment edges act as walls too, so slots here never extend
past the fragment; callers stitch fragments together separately.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .geometry import Run, Skyline

__all__ = ["Slot", "HeightIndex", "build_height_index", "build_height_index_runs", "SENTINEL_HEIGHT"]

SENTINEL_HEIGHT = 2**62  # taller than any sum of real rectangle heights


class Slot(NamedTuple):
    """A droppable gap: left edge, width in columns, and landing height.

    width == 0 means "nothing can be dropped at or below the queried
    height"; x and floor are 0 in that case.
    """

    x: int
    width: int
    floor: int


EMPTY_SLOT = Slot(0, 0, 0)


@dataclass(frozen=True)
class HeightIndex:
    """Sorted (height, best slot) pairs; widths are non-decreasing."""

    heights: tuple[int, ...]
    slots: tuple[Slot, ...]

    def widest_at_or_below(self, h: int) -> Slot:
        """Widest slot with floor at or below h, leftmost on ties; O(log V)."""
        i = bisect_right(self.heights, h) - 1
        if i < 0:
            return EMPTY_SLOT
        return self.slots[i]


def widest_at_or_below(idx: HeightIndex, h: int) -> Slot:
    return idx.widest_at_or_below(h)


def build_height_index_runs(runs: Sequence[Run], end_x: int) -> HeightIndex:
    """Index the fragment covering runs[0].start .. end_x."""
    n = len(runs)
    starts = [x for x, _ in runs]
    ends = [starts[i + 1] if i + 1 < n else end_x for i in range(n)]

    # Union-find over run indices; roots carry the gap extent and floor.
    parent = list(range(n))
    left = list(range(n))
    right = list(range(n))
    floor = [0] * n
    active = [False] * n

    def find(i: int) -> int:
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    def union(a: int, b: int) -> int:
        ra, rb = find(a), find(b)
        if ra == rb:
            return ra
        parent[rb] = ra
        left[ra] = min(left[ra], left[rb])
        right[ra] = max(right[ra], right[rb])
        floor[ra] = max(floor[ra], floor[rb])
        return ra

    order = sorted(
        (i for i in range(n) if runs[i][1] != SENTINEL_HEIGHT),
        key=lambda i: runs[i][1],
    )

    entry_hs: list[int] = []
    entry_slots: list[Slot] = []
    best = EMPTY_SLOT
    pos = 0
    while pos < len(order):
        h = runs[order[pos]][1]
        touched: list[int] = []
        while pos < len(order) and runs[order[pos]][1] == h:
            i = order[pos]
            active[i] = True
            floor[i] = h
            root = i
            if i > 0 and active[i - 1]:
                root = union(i - 1, root)
            if i + 1 < n and active[i + 1]:
                root = union(root, i + 1)
            touched.append(root)
            pos += 1
        for r in touched:
            r = find(r)
            x = starts[left[r]]
            width = ends[right[r]] - x
            if width > best.width or (width == best.width and x < best.x):
                best = Slot(x, width, floor[r])
        entry_hs.append(h)
        entry_slots.append(best)
    return HeightIndex(tuple(entry_hs), tuple(entry_slots))


def build_height_index(sky: Skyline) -> HeightIndex:
    """Index a full skyline; the board edges act as the outer walls."""
    return build_height_index_runs(sky.runs, sky.board_width)
