"""Minimal HTTP+JSON game service: one board per session.

Routes:
    POST /game {"width": W}            -> {"id": token}
    GET  /game/{id}                    -> {"skyline": wire, "score", "move_log"}
    POST /game/{id}/query {"w", "h"}   -> {"x", "landing", "max"}
    POST /game/{id}/drop {"w","h","x"} -> {"landing", "max"}

Errors come back as {"error": code, "message": text} with 400/404 status.
Sessions are in-memory, serialized per session id (one logical writer),
and evicted after an idle timeout; the move log makes a session trivially
re-creatable by replay.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .errors import BoardError
from .rdds import RDDS, new_rdds
from .wire import skyline_to_wire

__all__ = ["create_app", "DEFAULT_IDLE_SECONDS"]

DEFAULT_IDLE_SECONDS = 30 * 60


class NewGame(BaseModel):
    width: int = Field(ge=1, le=10**9)


class QueryBody(BaseModel):
    w: int = Field(ge=1)
    h: int = Field(ge=1)


class DropBody(BaseModel):
    w: int = Field(ge=1)
    h: int = Field(ge=1)
    x: int = Field(ge=0)


@dataclass
class GameSession:
    rdds: RDDS
    move_log: list[tuple[int, int, int]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)

    @property
    def score(self) -> int:
        return self.rdds.global_max


class _ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        self.status, self.code, self.message = status, code, message


def create_app(idle_seconds: float = DEFAULT_IDLE_SECONDS, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="rectdrop", version="0.1.0")
    sessions: dict[str, GameSession] = {}
    registry_lock = threading.Lock()

    def evict_idle() -> None:
        cutoff = time.monotonic() - idle_seconds
        with registry_lock:
            for sid in [s for s, g in sessions.items() if g.last_access < cutoff]:
                del sessions[sid]

    def get_session(sid: str) -> GameSession:
        evict_idle()
        with registry_lock:
            game = sessions.get(sid)
        if game is None:
            raise _ApiError(404, "unknown-session", f"no session {sid!r}")
        game.last_access = time.monotonic()
        return game

    @app.exception_handler(_ApiError)
    async def api_error(_req: Request, exc: _ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"error": exc.code, "message": exc.message},
        )

    @app.exception_handler(BoardError)
    async def board_error(_req: Request, exc: BoardError):
        code = type(exc).__name__.removesuffix("Error")
        code = "".join("-" + c.lower() if c.isupper() else c for c in code).lstrip("-")
        return JSONResponse(status_code=400, content={"error": code, "message": str(exc)})

    @app.post("/game")
    def create_game(body: NewGame):
        evict_idle()
        sid = secrets.token_hex(8)
        with registry_lock:
            sessions[sid] = GameSession(rdds=new_rdds(body.width))
        return {"id": sid}

    @app.get("/game/{sid}")
    def get_state(sid: str):
        game = get_session(sid)
        with game.lock:
            return {
                "skyline": skyline_to_wire(game.rdds.snapshot()),
                "score": game.score,
                "move_log": [list(m) for m in game.move_log],
            }

    @app.post("/game/{sid}/query")
    def post_query(sid: str, body: QueryBody):
        game = get_session(sid)
        with game.lock:
            move = game.rdds.query(body.w, body.h)
        return {"x": move.x_d, "landing": move.landing_y, "max": move.resulting_max}

    @app.post("/game/{sid}/drop")
    def post_drop(sid: str, body: DropBody):
        game = get_session(sid)
        with game.lock:
            new_max = game.rdds.update(body.w, body.h, body.x)
            game.move_log.append((body.w, body.h, body.x))
            return {"landing": game.rdds.last_landing, "max": new_max}

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
