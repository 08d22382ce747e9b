import { describe, expect, it } from "vitest";

import {
  columnAtPixel,
  columnsFromRuns,
  makeYScale,
  runsFromColumns,
  suggestionBox,
} from "../src/board.js";
import type { SkylineWire } from "../src/types.js";

describe("columnsFromRuns", () => {
  it("expands a fresh board to zeros", () => {
    const wire: SkylineWire = { board_width: 5, runs: [[0, 0]] };
    expect(columnsFromRuns(wire)).toEqual([0, 0, 0, 0, 0]);
  });

  it("matches the wire skyline exactly", () => {
    const wire: SkylineWire = {
      board_width: 8,
      runs: [
        [0, 4],
        [3, 0],
        [5, 2],
      ],
    };
    expect(columnsFromRuns(wire)).toEqual([4, 4, 4, 0, 0, 2, 2, 2]);
  });

  it("round-trips through run-length encoding", () => {
    for (let trial = 0; trial < 200; trial++) {
      const width = 1 + Math.floor(Math.random() * 40);
      const columns = Array.from({ length: width }, () =>
        Math.floor(Math.random() * 5)
      );
      const runs = runsFromColumns(columns);
      expect(
        columnsFromRuns({ board_width: width, runs })
      ).toEqual(columns);
      // canonical: strictly increasing starts, no equal neighbors
      for (let i = 1; i < runs.length; i++) {
        expect(runs[i]![0]).toBeGreaterThan(runs[i - 1]![0]);
        expect(runs[i]![1]).not.toBe(runs[i - 1]![1]);
      }
    }
  });
});

describe("makeYScale", () => {
  it("is linear below the cap when nothing overflows", () => {
    const s = makeYScale(10, 20);
    expect(s.toFraction(0)).toBe(0);
    expect(s.toFraction(10)).toBeCloseTo(0.5);
    expect(s.toFraction(20)).toBeCloseTo(1);
  });

  it("compresses overflow into the top band, monotonically", () => {
    const s = makeYScale(1_000_000, 24, 0.72);
    expect(s.toFraction(24)).toBeCloseTo(0.72);
    expect(s.toFraction(1_000_000)).toBeCloseTo(1);
    let prev = -1;
    for (const h of [0, 1, 5, 24, 25, 100, 5000, 999_999, 1_000_000]) {
      const f = s.toFraction(h);
      expect(f).toBeGreaterThan(prev);
      expect(f).toBeLessThanOrEqual(1);
      prev = f;
    }
  });

  it("keeps tall funnel walls distinguishable from the floor", () => {
    const s = makeYScale(2 ** 40);
    expect(s.toFraction(2 ** 40)).toBeLessThanOrEqual(1);
    expect(s.toFraction(1)).toBeGreaterThan(0);
  });
});

describe("suggestionBox", () => {
  it("passes the service answer through untouched", () => {
    const box = suggestionBox({ x: 4, landing: 7, max: 12 }, { w: 3, h: 5 });
    expect(box).toEqual({ x: 4, y: 7, w: 3, h: 5 });
  });
});

describe("columnAtPixel", () => {
  it("maps pixels to columns and clamps to keep the piece on board", () => {
    expect(columnAtPixel(0, 960, 32, 1)).toBe(0);
    expect(columnAtPixel(959, 960, 32, 1)).toBe(31);
    expect(columnAtPixel(959, 960, 32, 5)).toBe(27);
    expect(columnAtPixel(480, 960, 32, 1)).toBe(16);
  });
});
