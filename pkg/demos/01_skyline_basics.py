#!/usr/bin/env python3
"""Skylines from first principles.

Build the upper envelope of a rectangle set, look at its staircases, and
drop a few pieces on it. Run with: python3 demos/01_skyline_basics.py
"""

from rectdrop import Rect, apply_drop, build_skyline, landing_height, staircases


def render(sky, cap=12):
    rows = []
    heights = sky.heights()
    for y in range(min(cap, max(heights)) - 1, -1, -1):
        rows.append("".join("#" if h > y else "." for h in heights))
    rows.append("-" * sky.board_width)
    return "\n".join(rows)


def main():
    rects = [Rect(x=2, y=0, width=3, height=5), Rect(x=6, y=2, width=4, height=2)]
    sky = build_skyline(rects, board_width=12)
    print("skyline of two rectangles (the floating one extends down):")
    print(render(sky))
    print("runs:", sky.runs)

    left, right = staircases(sky)
    print("\nleft staircase (walls visible from the far left): ", left.steps)
    print("right staircase (walls visible from the far right):", right.steps)

    print("\nwhere would a 4x2 piece land at x=2?",
          landing_height(sky, x_d=2, width=4))

    sky, y = apply_drop(sky, rect_width=4, rect_height=2, x_d=2)
    print(f"dropped it: landed at y={y}")
    print(render(sky))


if __name__ == "__main__":
    main()
