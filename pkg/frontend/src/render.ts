/** Canvas drawing. Thin on purpose: all decisions about what a pixel
 * means live in board.ts. */

import { makeYScale, suggestionBox, type BoardView } from "./board.js";

const FILL = "#4a6fa5";
const FILL_EDGE = "#33517d";
const SUGGEST_FILL = "rgba(106, 190, 105, 0.55)";
const SUGGEST_EDGE = "#2e7d32";
const BAND_LINE = "#c9a227";

export function render(canvas: HTMLCanvasElement, view: BoardView): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const { width: W, height: H } = canvas;
  ctx.clearRect(0, 0, W, H);

  const sugTop =
    view.suggestion && view.piece
      ? view.suggestion.landing + view.piece.h
      : 0;
  const maxH = Math.max(1, ...view.columns, sugTop);
  const scale = makeYScale(maxH);
  const colW = W / view.width;
  const yPix = (h: number) => H - scale.toFraction(h) * H;

  ctx.fillStyle = FILL;
  ctx.strokeStyle = FILL_EDGE;
  // Batch equal-height spans so wide boards stay cheap to repaint.
  for (let c = 0; c < view.columns.length; ) {
    const h = view.columns[c]!;
    let end = c + 1;
    while (end < view.columns.length && view.columns[end] === h) end++;
    if (h > 0) {
      const x = c * colW;
      const top = yPix(h);
      ctx.fillRect(x, top, (end - c) * colW, H - top);
      if (colW >= 3) ctx.strokeRect(x, top, (end - c) * colW, H - top);
    }
    c = end;
  }

  // Boundary of the compressed band, if anything reaches it.
  if (maxH > scale.linearCap) {
    const y = yPix(scale.linearCap);
    ctx.strokeStyle = BAND_LINE;
    ctx.setLineDash([4, 4]);
    ctx.beginPath();
    ctx.moveTo(0, y);
    ctx.lineTo(W, y);
    ctx.stroke();
    ctx.setLineDash([]);
  }

  if (view.suggestion && view.piece) {
    const box = suggestionBox(view.suggestion, view.piece);
    const x = box.x * colW;
    const top = yPix(box.y + box.h);
    const bottom = yPix(box.y);
    ctx.fillStyle = SUGGEST_FILL;
    ctx.strokeStyle = SUGGEST_EDGE;
    ctx.fillRect(x, top, box.w * colW, bottom - top);
    ctx.strokeRect(x, top, box.w * colW, bottom - top);
  }
}
