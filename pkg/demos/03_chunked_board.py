#!/usr/bin/env python3
"""Playing greedily with the chunked board.

A session of random pieces: ask the board where each piece would end up
lowest, drop it there, and cross-check everything against the naive
column-array oracle. Run with: python3 demos/03_chunked_board.py
"""

import random

from rectdrop import ColumnBoard, new_rdds


def main():
    rng = random.Random(11)
    width = 8192
    r = new_rdds(width)
    board = ColumnBoard(width)

    for turn in range(2000):
        w, h = rng.randint(1, 6), rng.randint(1, 8)
        move = r.query(w, h)
        _, oracle_landing = board.best(w)
        assert move.landing_y == oracle_landing
        # Mostly take the suggestion; sometimes drop stubbornly elsewhere
        # (greedy play alone levels the board into a handful of runs).
        x = move.x_d if rng.random() < 0.6 else rng.randint(0, width - w)
        r.update(w, h, x)
        board.drop(w, h, x)
        if turn % 400 == 0:
            print(f"turn {turn:>4}: piece {w}x{h} -> x={move.x_d}, "
                  f"lands {move.landing_y}, board max {move.resulting_max}, "
                  f"{len(r.chunks)} chunks of <= {2 * r.S} runs")

    assert r.snapshot().heights() == board.heights.tolist()
    r.check_invariants()
    print(f"\n2000 greedy moves verified against the oracle; "
          f"final max height {r.global_max}, {len(r.chunks)} chunks")


if __name__ == "__main__":
    main()
