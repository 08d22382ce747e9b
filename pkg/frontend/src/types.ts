/** Wire types, kept in sync with the Python service JSON. */

export type Run = [startX: number, height: number];

export type SkylineWire = {
  board_width: number;
  runs: Run[];
};

export type GameState = {
  skyline: SkylineWire;
  score: number;
  move_log: [w: number, h: number, x: number][];
};

export type Suggestion = {
  x: number;
  landing: number;
  max: number;
};

export type DropResult = {
  landing: number;
  max: number;
};

export type ApiError = {
  error: string;
  message: string;
};

export type Piece = {
  w: number;
  h: number;
};
