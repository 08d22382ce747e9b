"""Text formats shared by the CLI and the game service.

Skyline wire format: a flat JSON record
    {"board_width": W, "runs": [[start_x, height], ...]}

Op scripts: one operation per line,
    U <width> <height> <x>   drop
    Q <width> <height>       greedy query
    # comment / blank        ignored
"""

from __future__ import annotations

import json
from typing import Union

from .errors import ScriptError
from .geometry import Skyline

__all__ = [
    "skyline_to_wire",
    "wire_to_skyline",
    "dumps_skyline",
    "loads_skyline",
    "parse_script",
    "format_script",
]

UpdateOp = tuple[str, int, int, int]  # ("U", w, h, x)
QueryOp = tuple[str, int, int]  # ("Q", w, h)
Op = Union[UpdateOp, QueryOp]


def skyline_to_wire(sky: Skyline) -> dict:
    return {"board_width": sky.board_width, "runs": [list(r) for r in sky.runs]}


def wire_to_skyline(obj: dict) -> Skyline:
    width = obj["board_width"]
    runs = tuple((int(x), int(h)) for x, h in obj["runs"])
    if not runs or runs[0][0] != 0:
        raise ValueError(f"runs must start at x=0, got {runs[:1]}")
    for a, b in zip(runs, runs[1:]):
        if a[0] >= b[0] or a[1] == b[1]:
            raise ValueError(f"non-canonical runs near {a}, {b}")
    if runs[-1][0] >= width:
        raise ValueError("run starts past the board edge")
    return Skyline(width, runs)


def dumps_skyline(sky: Skyline) -> str:
    return json.dumps(skyline_to_wire(sky), separators=(",", ":"))


def loads_skyline(text: str) -> Skyline:
    return wire_to_skyline(json.loads(text))


def parse_script(text: str) -> list[Op]:
    ops: list[Op] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0].upper()
        try:
            if kind == "U" and len(fields) == 4:
                w, h, x = map(int, fields[1:])
                ops.append(("U", w, h, x))
            elif kind == "Q" and len(fields) == 3:
                w, h = map(int, fields[1:])
                ops.append(("Q", w, h))
            else:
                raise ValueError(f"unrecognized op {line!r}")
        except ValueError as e:
            raise ScriptError(lineno, str(e)) from None
    return ops


def format_script(ops) -> str:
    lines = []
    for op in ops:
        lines.append(" ".join(map(str, op)))
    return "\n".join(lines) + ("\n" if lines else "")
