"""Funnel/blocker reduction from three-phase set disjointness to greedy
rectangle dropping, used constructively as an adversarial test generator.

Phase 1 lays out the board from the set family: width-1 walls of height
k+1 cut the board into m regions of width k, and each region j gets one
funnel rectangle of height k+1-i for every i with j not in F_i, packed
flush left so the region narrows with height. Phase 2 seals every region
whose element is outside J under a width-(k+1) blocker of height 1.
Phase 3 asks where a rectangle of width k+1-i and height k+2 would land:
it reaches the floor area of some funnel (bottom at or below k-i, top at
or below 2k+2-i) exactly when J intersects F_i.

The blocker threshold test uses the reported resulting max height, which
is exact because 2k+2-i >= k+2 exceeds every pre-query board height.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InstanceError
from .rdds import RDDS, new_rdds

__all__ = [
    "MultiphaseInstance",
    "build_phase1",
    "build_phase2",
    "decide_phase3",
    "multiphase_direct",
    "apply_reduction",
    "parse_instance",
    "format_instance",
]

Op = tuple[int, int, int]  # (width, height, x_d) update


@dataclass(frozen=True)
class MultiphaseInstance:
    m: int
    k: int
    F: tuple[frozenset[int], ...]
    J: frozenset[int]
    i: int

    def __post_init__(self):
        if self.m < 1 or self.k < 1:
            raise InstanceError(f"need m, k >= 1, got m={self.m} k={self.k}")
        if len(self.F) != self.k:
            raise InstanceError(f"expected {self.k} sets, got {len(self.F)}")
        universe = set(range(1, self.m + 1))
        covered: set[int] = set()
        for s in self.F:
            if not s:
                raise InstanceError("empty set in family")
            if not s <= universe:
                raise InstanceError(f"set {sorted(s)} not within 1..{self.m}")
            covered |= s
        if covered != universe:
            raise InstanceError(f"family does not cover 1..{self.m}")
        if not self.J <= universe:
            raise InstanceError(f"J {sorted(self.J)} not within 1..{self.m}")
        if not 1 <= self.i <= self.k:
            raise InstanceError(f"index i={self.i} not in 1..{self.k}")

    @property
    def board_width(self) -> int:
        return self.m * (self.k + 1)


def build_phase1(m: int, k: int, F: tuple[frozenset[int], ...]) -> tuple[int, list[Op]]:
    """Board width and the wall + funnel drops for the family."""
    width = m * (k + 1)
    ops: list[Op] = []
    for j in range(1, m + 1):
        ops.append((1, k + 1, j * (k + 1) - 1))
    for j in range(1, m + 1):
        frontier = (j - 1) * (k + 1)
        for i in range(1, k + 1):
            if j not in F[i - 1]:
                right = i + (j - 1) * (k + 1)
                ops.append((right - frontier, k + 1 - i, frontier))
                frontier = right
    return width, ops


def build_phase2(inst: MultiphaseInstance) -> list[Op]:
    """Blockers sealing every region whose element is not in J."""
    return [
        (inst.k + 1, 1, (j - 1) * (inst.k + 1))
        for j in range(1, inst.m + 1)
        if j not in inst.J
    ]


def decide_phase3(rdds: RDDS, inst: MultiphaseInstance) -> bool:
    """One query decides whether J intersects F_i."""
    move = rdds.query(inst.k + 1 - inst.i, inst.k + 2)
    return move.resulting_max <= 2 * inst.k + 2 - inst.i


def multiphase_direct(inst: MultiphaseInstance) -> bool:
    """Ground truth by plain set intersection."""
    return bool(inst.J & inst.F[inst.i - 1])


def apply_reduction(inst: MultiphaseInstance) -> tuple[bool, RDDS]:
    """Run all three phases through the public update/query interface."""
    width, ops = build_phase1(inst.m, inst.k, inst.F)
    rdds = new_rdds(width)
    for w, h, x in ops:
        rdds.update(w, h, x)
    for w, h, x in build_phase2(inst):
        rdds.update(w, h, x)
    return decide_phase3(rdds, inst), rdds


def parse_instance(text: str) -> MultiphaseInstance:
    """Read the instance text format:

        m k
        <elements of F_1>
        ...
        <elements of F_k>
        J: <elements>
        i: <index>
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise InstanceError("empty instance")
    try:
        m, k = map(int, lines[0].split())
    except ValueError as e:
        raise InstanceError(f"bad header {lines[0]!r}: {e}") from None
    if len(lines) < k + 3:
        raise InstanceError(f"expected {k} set lines plus J and i, got {len(lines) - 1}")
    F = []
    for ln in lines[1 : k + 1]:
        try:
            F.append(frozenset(map(int, ln.split())))
        except ValueError:
            raise InstanceError(f"bad set line {ln!r}") from None
    j_line, i_line = lines[k + 1], lines[k + 2]
    if not j_line.startswith("J:") or not i_line.startswith("i:"):
        raise InstanceError("expected trailing 'J:' and 'i:' lines")
    try:
        J = frozenset(map(int, j_line[2:].split()))
        i = int(i_line[2:])
    except ValueError:
        raise InstanceError("bad J or i line") from None
    return MultiphaseInstance(m, k, tuple(F), J, i)


def format_instance(inst: MultiphaseInstance) -> str:
    lines = [f"{inst.m} {inst.k}"]
    lines += [" ".join(map(str, sorted(s))) for s in inst.F]
    lines.append("J: " + " ".join(map(str, sorted(inst.J))))
    lines.append(f"i: {inst.i}")
    return "\n".join(lines) + "\n"
