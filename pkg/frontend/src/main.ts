/** App wiring: one session, one pending piece, one suggestion.
 *
 * The game loop: enter (or roll) the next piece's dimensions, see where
 * the greedy move would put it, then accept it or click a column to
 * drop somewhere else. Suggestion requests cancel on supersede; drops
 * are serialized (one in-flight mutation at a time).
 */

import { GameClient, ServiceError } from "./api.js";
import { columnAtPixel, makeBoardView } from "./board.js";
import { render } from "./render.js";
import type { GameState, Piece, Suggestion } from "./types.js";

const $ = <T extends HTMLElement>(id: string): T =>
  document.getElementById(id) as T;

const canvas = $<HTMLCanvasElement>("board");
const scoreEl = $("score");
const statusEl = $("status");
const widthInput = $<HTMLInputElement>("board-width");
const wInput = $<HTMLInputElement>("piece-w");
const hInput = $<HTMLInputElement>("piece-h");

let client: GameClient | null = null;
let state: GameState | null = null;
let piece: Piece | null = null;
let suggestion: Suggestion | null = null;
let suggestAbort: AbortController | null = null;
let dropping = false;

function setStatus(text: string, isError = false): void {
  statusEl.textContent = text;
  statusEl.className = isError ? "error" : "";
}

function repaint(): void {
  if (!state) return;
  scoreEl.textContent = String(state.score);
  render(canvas, makeBoardView(state.skyline, state.score, piece, suggestion));
}

function currentPiece(): Piece | null {
  const w = Number(wInput.value);
  const h = Number(hInput.value);
  if (!Number.isInteger(w) || !Number.isInteger(h) || w < 1 || h < 1) {
    setStatus("piece sides must be positive integers", true);
    return null;
  }
  return { w, h };
}

/** Ask the service for the greedy move; stale responses are discarded. */
async function refreshSuggestion(): Promise<void> {
  if (!client) return;
  piece = currentPiece();
  suggestion = null;
  repaint();
  if (!piece) return;
  suggestAbort?.abort();
  const ctl = new AbortController();
  suggestAbort = ctl;
  try {
    const s = await client.query(piece.w, piece.h, ctl.signal);
    if (suggestAbort !== ctl) return; // superseded
    suggestion = s;
    setStatus(
      `greedy move: x=${s.x}, lands at ${s.landing}, board max becomes ${s.max}`
    );
    repaint();
  } catch (err) {
    if (ctl.signal.aborted) return;
    surface(err);
  }
}

async function dropAt(x: number): Promise<void> {
  if (!client || !piece || dropping) return;
  dropping = true;
  try {
    const result = await client.drop(piece.w, piece.h, x);
    state = await client.getState();
    setStatus(`dropped at x=${x}: landed ${result.landing}, max ${result.max}`);
    rollPiece();
    await refreshSuggestion();
  } catch (err) {
    surface(err);
  } finally {
    dropping = false;
    repaint();
  }
}

function rollPiece(): void {
  if (!state) return;
  const maxW = Math.max(1, Math.min(state.skyline.board_width, 12));
  wInput.value = String(1 + Math.floor(Math.random() * maxW));
  hInput.value = String(1 + Math.floor(Math.random() * 6));
}

function surface(err: unknown): void {
  if (err instanceof ServiceError) {
    setStatus(`${err.code}: ${err.message}`, true);
  } else {
    setStatus(String(err), true);
  }
}

async function newGame(): Promise<void> {
  const width = Number(widthInput.value);
  if (!Number.isInteger(width) || width < 1) {
    setStatus("board width must be a positive integer", true);
    return;
  }
  try {
    client = await GameClient.create("", width);
    state = await client.getState();
    setStatus(`new game ${client.id} on a width-${width} board`);
    await refreshSuggestion();
  } catch (err) {
    surface(err);
  }
  repaint();
}

$("new-game").addEventListener("click", () => void newGame());
$("roll").addEventListener("click", () => {
  rollPiece();
  void refreshSuggestion();
});
$("accept").addEventListener("click", () => {
  if (suggestion) void dropAt(suggestion.x);
});
wInput.addEventListener("change", () => void refreshSuggestion());
hInput.addEventListener("change", () => void refreshSuggestion());
canvas.addEventListener("click", (evt) => {
  if (!state || !piece) return;
  const rect = canvas.getBoundingClientRect();
  const px = ((evt.clientX - rect.left) / rect.width) * canvas.width;
  void dropAt(
    columnAtPixel(px, canvas.width, state.skyline.board_width, piece.w)
  );
});

void newGame();
