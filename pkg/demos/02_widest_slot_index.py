#!/usr/bin/env python3
"""The widest-droppable-slot index.

For any height h: how wide a rectangle could be dropped so it rests at
or below h, and where? The index answers in O(log n) after an
O(n log n) build. Run with: python3 demos/02_widest_slot_index.py
"""

from rectdrop import Skyline, build_height_index, widest_at_or_below


def main():
    # A little canyon: tall walls, a bumpy floor.
    sky = Skyline(14, ((0, 9), (2, 1), (5, 4), (7, 2), (11, 6), (13, 0)))
    print("runs:", sky.runs)

    idx = build_height_index(sky)
    print("\nstored entries (height -> widest slot at or below it):")
    for h, slot in zip(idx.heights, idx.slots):
        print(f"  h={h:>2}  ->  x={slot.x:>2}  width={slot.width:>2}  floor={slot.floor}")

    print("\narbitrary probes resolve to the nearest stored height below:")
    for h in (0, 3, 5, 100):
        s = widest_at_or_below(idx, h)
        print(f"  at or below {h:>3}: width {s.width} at x={s.x} (lands on {s.floor})")

    # The slot at h=4 spans [2, 11): its floor (4) is an interior bump,
    # not the base of either bounding wall.
    assert widest_at_or_below(idx, 4).width == 9


if __name__ == "__main__":
    main()
