"""Brute-force column-array reference board.

Everything here is O(board_width) per operation and definitionally
correct; the equivalence suites in the rest of the package treat these
answers as ground truth. Boards are explicit numpy arrays, so widths are
capped around 10**6 in practice.
"""

from __future__ import annotations

import numpy as np
from scipy.ndimage import maximum_filter1d

from .errors import OutOfBoardError, WidthExceedsBoardError
from .height_index import Slot

__all__ = ["ColumnBoard", "sliding_max"]


def sliding_max(heights: np.ndarray, width: int) -> np.ndarray:
    """Max over every length-`width` window; entry i covers [i, i+width)."""
    if width == 1:
        return heights
    out = maximum_filter1d(heights, size=width, origin=-(width // 2), mode="nearest")
    return out[: len(heights) - width + 1]


class ColumnBoard:
    """One int64 height per column; the naive counterpart of a skyline."""

    def __init__(self, board_width: int):
        if board_width < 1:
            raise OutOfBoardError(f"board width must be >= 1, got {board_width}")
        self.board_width = board_width
        self.heights = np.zeros(board_width, dtype=np.int64)

    def _check_footprint(self, width: int, x: int) -> None:
        if width < 1:
            raise OutOfBoardError(f"rect width must be >= 1, got {width}")
        if x < 0 or x + width > self.board_width:
            raise OutOfBoardError(
                f"footprint [{x}, {x + width}) outside board [0, {self.board_width})"
            )

    def drop(self, width: int, height: int, x: int) -> int:
        """Drop a rectangle; returns its landing height and raises the columns."""
        self._check_footprint(width, x)
        if height < 1:
            raise OutOfBoardError(f"rect height must be >= 1, got {height}")
        landing = int(self.heights[x : x + width].max())
        self.heights[x : x + width] = landing + height
        return landing

    def best(self, width: int) -> tuple[int, int]:
        """Leftmost x minimizing the landing height of a width-`width` rectangle."""
        if width > self.board_width:
            raise WidthExceedsBoardError(
                f"rect width {width} exceeds board width {self.board_width}"
            )
        if width < 1:
            raise OutOfBoardError(f"rect width must be >= 1, got {width}")
        landings = sliding_max(self.heights, width)
        x = int(np.argmin(landings))  # argmin takes the first minimum
        return x, int(landings[x])

    def widest_at_or_below(self, h: int) -> Slot:
        """Leftmost widest run of columns with height <= h."""
        passable = self.heights <= h
        if not passable.any():
            return Slot(0, 0, 0)
        # Edges of maximal passable runs via the padded diff trick.
        padded = np.concatenate(([False], passable, [False]))
        edges = np.flatnonzero(np.diff(padded.astype(np.int8)))
        starts, stops = edges[::2], edges[1::2]
        widths = stops - starts
        i = int(np.argmax(widths))  # first maximum: leftmost widest
        floor = int(self.heights[starts[i] : stops[i]].max())
        return Slot(int(starts[i]), int(widths[i]), floor)

    def copy(self) -> "ColumnBoard":
        dup = ColumnBoard(self.board_width)
        dup.heights = self.heights.copy()
        return dup
