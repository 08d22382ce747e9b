"""Greedy rectangle dropping: skyline geometry, a chunked board structure
with sublinear greedy-placement queries, brute-force oracles, the funnel
reduction gadget, a CLI, and a small HTTP game service.
"""

from .errors import (
    BoardError,
    InstanceError,
    OutOfBoardError,
    OverlapError,
    ScriptError,
    WidthExceedsBoardError,
)
from .geometry import (
    Rect,
    Skyline,
    Staircase,
    apply_drop,
    build_skyline,
    landing_height,
    staircases,
)
from .height_index import (
    SENTINEL_HEIGHT,
    HeightIndex,
    Slot,
    build_height_index,
    widest_at_or_below,
)
from .oracle import ColumnBoard
from .rdds import RDDS, Chunk, GreedyMove, bulk_build, new_rdds

__version__ = "0.1.0"

__all__ = [
    "BoardError",
    "ColumnBoard",
    "Chunk",
    "GreedyMove",
    "HeightIndex",
    "InstanceError",
    "OutOfBoardError",
    "OverlapError",
    "RDDS",
    "Rect",
    "ScriptError",
    "SENTINEL_HEIGHT",
    "Skyline",
    "Slot",
    "Staircase",
    "WidthExceedsBoardError",
    "apply_drop",
    "build_height_index",
    "build_skyline",
    "bulk_build",
    "landing_height",
    "new_rdds",
    "staircases",
    "widest_at_or_below",
]
