/** Pure view geometry. Everything here is deterministic math over the
 * wire state so it can be unit-tested without a DOM; the invariant is
 * that the rendered column heights equal the wire skyline exactly. */

import type { Piece, Run, SkylineWire, Suggestion } from "./types.js";

export type BoardView = {
  width: number;
  columns: number[];
  score: number;
  piece: Piece | null;
  suggestion: Suggestion | null;
};

/** Expand canonical runs into one height per column. */
export function columnsFromRuns(wire: SkylineWire): number[] {
  const heights = new Array<number>(wire.board_width).fill(0);
  for (let i = 0; i < wire.runs.length; i++) {
    const [start, h] = wire.runs[i]!;
    const end = i + 1 < wire.runs.length ? wire.runs[i + 1]![0] : wire.board_width;
    for (let c = start; c < end; c++) heights[c] = h;
  }
  return heights;
}

/** Re-encode columns as canonical runs (used to check round-trips). */
export function runsFromColumns(columns: number[]): Run[] {
  const runs: Run[] = [];
  columns.forEach((h, c) => {
    if (runs.length === 0 || runs[runs.length - 1]![1] !== h) runs.push([c, h]);
  });
  return runs.length ? runs : [[0, 0]];
}

export type YScale = {
  /** Height in board units -> fraction of the viewport, 0 floor, 1 top. */
  toFraction: (h: number) => number;
  linearCap: number;
  maxHeight: number;
};

/**
 * Heights up to `linearCap` get fixed-size rows in the lower
 * `linearShare` of the viewport; anything taller is compressed into the
 * remaining band on a log scale, so funnel boards with kilometre-tall
 * walls still fit on screen.
 */
export function makeYScale(
  maxHeight: number,
  linearCap = 24,
  linearShare = 0.72
): YScale {
  const cap = Math.max(1, linearCap);
  const overflow = Math.max(0, maxHeight - cap);
  const logSpan = Math.log2(1 + overflow);
  const toFraction = (h: number): number => {
    if (h <= 0) return 0;
    if (h <= cap || overflow === 0) {
      return Math.min(h, cap) / cap * (overflow > 0 ? linearShare : 1);
    }
    const compressed = Math.log2(1 + (Math.min(h, maxHeight) - cap)) / logSpan;
    return linearShare + (1 - linearShare) * compressed;
  };
  return { toFraction, linearCap: cap, maxHeight };
}

/** Where the pending piece would sit if dropped as suggested. */
export function suggestionBox(
  s: Suggestion,
  piece: Piece
): { x: number; y: number; w: number; h: number } {
  return { x: s.x, y: s.landing, w: piece.w, h: piece.h };
}

export function makeBoardView(
  wire: SkylineWire,
  score: number,
  piece: Piece | null,
  suggestion: Suggestion | null
): BoardView {
  return { width: wire.board_width, columns: columnsFromRuns(wire), score, piece, suggestion };
}

/** Column under a canvas x coordinate, clamped so the piece stays on board. */
export function columnAtPixel(
  px: number,
  canvasWidth: number,
  boardWidth: number,
  pieceWidth: number
): number {
  const col = Math.floor((px / canvasWidth) * boardWidth);
  return Math.max(0, Math.min(col, boardWidth - pieceWidth));
}
