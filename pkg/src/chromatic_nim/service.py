"""HTTP service around the engine.

Run `chromatic-nim serve` or mount `create_app()` under any ASGI server.
Sessions live in memory; pass `persist_path` to survive restarts.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware

from . import solvers
from .colorings import ColoringScheme, scheme_from_dict
from .engine import (
    DEFAULT_MAX_HEIGHT,
    apply_move,
    as_position,
    is_green_position,
    move_from_dict,
    move_to_dict,
)
from .errors import ChromaticNimError, IllegalMove


@dataclass
class Session:
    id: str
    scheme: ColoringScheme
    heaps: tuple[int, ...]
    engine_side: str
    turn: str | None = None
    winner: str | None = None
    history: list[dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "scheme": self.scheme.to_dict(),
            "position": {"heaps": list(self.heaps)},
            "engine_side": self.engine_side,
            "turn": self.turn,
            "winner": self.winner,
            "finished": self.winner is not None,
            "green_position": is_green_position(self.scheme, self.heaps),
            "history": list(self.history),
        }


class GameStore:
    """Sessions plus the locking and persistence around them."""

    def __init__(self, persist_path: str | None, max_height: int) -> None:
        self.max_height = max_height
        self.persist_path = Path(persist_path) if persist_path else None
        self.sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._store_lock = threading.Lock()
        if self.persist_path and self.persist_path.is_file():
            self._load()

    def _load(self) -> None:
        data = json.loads(self.persist_path.read_text())
        for raw in data.get("sessions", []):
            session = Session(
                id=raw["id"],
                scheme=scheme_from_dict(raw["scheme"]),
                heaps=tuple(raw["position"]["heaps"]),
                engine_side=raw["engine_side"],
                turn=raw["turn"],
                winner=raw["winner"],
                history=list(raw["history"]),
            )
            self.sessions[session.id] = session
            self._locks[session.id] = threading.Lock()

    def save(self) -> None:
        if not self.persist_path:
            return
        with self._store_lock:
            payload = {"sessions": [s.to_dict() for s in self.sessions.values()]}
            tmp = self.persist_path.with_suffix(".tmp")
            tmp.write_text(json.dumps(payload))
            tmp.replace(self.persist_path)

    def add(self, session: Session) -> None:
        with self._store_lock:
            self.sessions[session.id] = session
            self._locks[session.id] = threading.Lock()

    def get(self, session_id: str) -> Session:
        session = self.sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown game id")
        return session

    def lock(self, session_id: str) -> threading.Lock:
        return self._locks[session_id]


def _bad_request(message: str) -> HTTPException:
    return HTTPException(status_code=400, detail=message)


async def _json_body(request: Request) -> dict[str, Any]:
    try:
        body = await request.json()
    except json.JSONDecodeError as exc:
        raise _bad_request(f"body is not valid JSON: {exc}") from exc
    if not isinstance(body, dict):
        raise _bad_request("body must be a JSON object")
    return body


def _parse_scheme(raw: Any) -> ColoringScheme:
    if isinstance(raw, str):
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise _bad_request(f"scheme is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise _bad_request("scheme must be a JSON object")
    try:
        return scheme_from_dict(raw)
    except ValueError as exc:
        raise _bad_request(str(exc)) from exc


def create_app(
    *,
    persist_path: str | None = None,
    max_height: int = DEFAULT_MAX_HEIGHT,
    ui_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="chromatic-nim", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = GameStore(persist_path, max_height)
    app.state.store = store

    def engine_move(session: Session) -> None:
        move = solvers.engine_reply(session.scheme, session.heaps, max_height=store.max_height)
        session.heaps = apply_move(session.scheme, session.heaps, move)
        session.history.append({"mover": "engine", "move": move_to_dict(move)})
        if any(session.heaps):
            session.turn = "human"
        else:
            session.winner = "engine"
            session.turn = None

    @app.get("/")
    def root() -> dict[str, Any]:
        return {
            "name": "chromatic-nim",
            "endpoints": [
                "POST /games",
                "GET /games/{id}",
                "POST /games/{id}/moves",
                "GET /games/{id}/hint",
                "GET /coloring",
                "GET /ppositions",
            ],
        }

    @app.post("/games", status_code=201)
    async def create_game(request: Request) -> dict[str, Any]:
        body = await _json_body(request)
        scheme = _parse_scheme(body.get("scheme"))
        raw_heaps = body.get("heaps")
        if not isinstance(raw_heaps, list):
            raise _bad_request("heaps must be a list of heights")
        try:
            heaps = as_position(raw_heaps, store.max_height)
        except (ValueError, ChromaticNimError) as exc:
            raise _bad_request(str(exc)) from exc
        engine_side = body.get("engine_side", "second")
        if engine_side not in ("first", "second"):
            raise _bad_request("engine_side must be 'first' or 'second'")
        session = Session(
            id=uuid.uuid4().hex[:12],
            scheme=scheme,
            heaps=heaps,
            engine_side=engine_side,
        )
        first = "engine" if engine_side == "first" else "human"
        if not any(heaps):
            # Nothing to take: whoever would move loses at once.
            session.winner = "human" if first == "engine" else "engine"
        else:
            session.turn = first
            if first == "engine":
                engine_move(session)
        store.add(session)
        store.save()
        return session.to_dict()

    @app.get("/games/{session_id}")
    def get_game(session_id: str) -> dict[str, Any]:
        return store.get(session_id).to_dict()

    @app.post("/games/{session_id}/moves")
    async def post_move(session_id: str, request: Request) -> dict[str, Any]:
        body = await _json_body(request)
        session = store.get(session_id)
        lock = store.lock(session_id)
        if not lock.acquire(blocking=False):
            raise HTTPException(status_code=409, detail="a move is already in flight")
        try:
            if session.winner is not None:
                raise HTTPException(status_code=422, detail="game is finished")
            if session.turn != "human":
                raise HTTPException(status_code=422, detail="not your turn")
            raw_move = body.get("move", body)
            try:
                move = move_from_dict(raw_move)
            except ValueError as exc:
                raise _bad_request(str(exc)) from exc
            try:
                session.heaps = apply_move(session.scheme, session.heaps, move)
            except IllegalMove as exc:
                raise HTTPException(
                    status_code=422, detail={"code": exc.code, "message": exc.message}
                ) from exc
            session.history.append({"mover": "human", "move": move_to_dict(move)})
            if any(session.heaps):
                session.turn = "engine"
                engine_move(session)
            else:
                session.winner = "human"
                session.turn = None
            store.save()
            return session.to_dict()
        finally:
            lock.release()

    @app.get("/games/{session_id}/hint")
    def hint(session_id: str) -> dict[str, Any]:
        session = store.get(session_id)
        if session.winner is not None:
            raise HTTPException(status_code=422, detail="game is finished")
        backend, status, moves = solvers.solve(
            session.scheme, session.heaps, max_height=store.max_height
        )
        move = moves[0] if moves else solvers.fallback_smallest_removal(session.heaps)
        return {
            "status": status.value,
            "backend": backend,
            "move": move_to_dict(move) if move is not None else None,
        }

    @app.get("/coloring")
    def coloring(scheme: str, upto: int) -> dict[str, Any]:
        parsed = _parse_scheme(scheme)
        if upto < 0 or upto > store.max_height:
            raise _bad_request(f"upto must be between 0 and {store.max_height}")
        colors = "".join(parsed.color(level).value for level in range(1, upto + 1))
        return {"scheme": parsed.to_dict(), "upto": upto, "colors": colors}

    @app.get("/ppositions")
    def ppositions(
        scheme: str,
        strategy: str = "auto",
        count: int | None = None,
        height: int | None = None,
    ) -> dict[str, Any]:
        parsed = _parse_scheme(scheme)
        if strategy not in solvers.STRATEGY_NAMES:
            raise _bad_request(f"unknown strategy {strategy!r}")
        if count is not None and height is not None:
            raise _bad_request("give count or height, not both")
        if count is None and height is None:
            count = 10
        try:
            resolved, pairs = solvers.p_pairs(
                parsed,
                count=count,
                limit=height,
                strategy=strategy,
                max_height=store.max_height,
            )
        except (ChromaticNimError, ValueError) as exc:
            raise _bad_request(str(exc)) from exc
        return {
            "scheme": parsed.to_dict(),
            "strategy": resolved,
            "pairs": [[p.a, p.b] for p in pairs],
        }

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
