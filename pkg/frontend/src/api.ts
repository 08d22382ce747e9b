/** Thin typed client for the game service. All geometry (landings,
 * suggestions, resulting heights) comes from the service; the UI never
 * computes it locally. */

import type { DropResult, GameState, Suggestion } from "./types.js";

export class ServiceError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number
  ) {
    super(message);
  }
}

async function request<T>(
  base: string,
  path: string,
  init?: RequestInit
): Promise<T> {
  const res = await fetch(base + path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    throw new ServiceError(
      body.error ?? `http-${res.status}`,
      body.message ?? res.statusText,
      res.status
    );
  }
  return body as T;
}

export class GameClient {
  constructor(
    readonly base: string,
    readonly id: string
  ) {}

  static async create(base: string, width: number): Promise<GameClient> {
    const { id } = await request<{ id: string }>(base, "/game", {
      method: "POST",
      body: JSON.stringify({ width }),
    });
    return new GameClient(base, id);
  }

  getState(): Promise<GameState> {
    return request<GameState>(this.base, `/game/${this.id}`);
  }

  query(w: number, h: number, signal?: AbortSignal): Promise<Suggestion> {
    return request<Suggestion>(this.base, `/game/${this.id}/query`, {
      method: "POST",
      body: JSON.stringify({ w, h }),
      signal,
    });
  }

  drop(w: number, h: number, x: number): Promise<DropResult> {
    return request<DropResult>(this.base, `/game/${this.id}/drop`, {
      method: "POST",
      body: JSON.stringify({ w, h, x }),
    });
  }
}
