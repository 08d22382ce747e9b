#!/usr/bin/env python3
"""Set disjointness decided by dropping one rectangle.

Walls split the board into regions; funnels in region j encode which
sets miss element j; blockers seal regions outside J. A single greedy
query of width k+1-i then tells whether J intersects F_i: the piece
reaches the floor area of an open funnel exactly when it does.
Run with: python3 demos/04_funnel_reduction.py
"""

import random

from rectdrop.multiphase import (
    MultiphaseInstance,
    apply_reduction,
    multiphase_direct,
)


def render(rdds, cap=10):
    heights = rdds.snapshot().heights()
    rows = []
    for y in range(min(cap, max(heights)) - 1, -1, -1):
        rows.append("".join("#" if h > y else "." for h in heights))
    rows.append("-" * len(heights))
    return "\n".join(rows)


def main():
    F = (frozenset({1}), frozenset({1, 2}))
    for i in (1, 2):
        inst = MultiphaseInstance(m=2, k=2, F=F, J=frozenset({2}), i=i)
        decided, rdds = apply_reduction(inst)
        print(f"m=2 k=2 F={[sorted(s) for s in F]} J={sorted(inst.J)} i={i}")
        print(render(rdds))
        print(f"board says J meets F_{i}: {decided}; "
              f"set intersection says: {multiphase_direct(inst)}\n")

    rng = random.Random(3)
    agree = 0
    for _ in range(200):
        m, k = rng.randint(1, 10), rng.randint(1, 10)
        universe = list(range(1, m + 1))
        F = tuple(
            frozenset(e for e in universe if rng.random() < 0.4) or frozenset({1})
            for _ in range(k)
        )
        if frozenset().union(*F) != set(universe):
            continue
        inst = MultiphaseInstance(
            m, k, F,
            frozenset(e for e in universe if rng.random() < 0.3),
            rng.randint(1, k),
        )
        agree += apply_reduction(inst)[0] == multiphase_direct(inst)
    print(f"random spot check: {agree}/{agree} boards agree with set intersection")


if __name__ == "__main__":
    main()
