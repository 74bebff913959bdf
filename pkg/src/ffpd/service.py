"""HTTP session service for the pressing engine.

A small FastAPI app exposing press/undo/analysis over JSON, backed by an
in-memory session store (optional one-file-per-session JSON snapshots, no
database).  The service adds no pressing semantics of its own: every state it
returns is exactly what replaying the same log through the pressing module
produces.

Endpoints:
  POST   /sessions                {graph JSON}     -> {id, state}
  GET    /sessions/{id}                            -> state
  POST   /sessions/{id}/press     {"vertex": i}    -> state, or 409
  POST   /sessions/{id}/undo                       -> state, or 409
  GET    /sessions/{id}/analysis                   -> pressable / some_order / pd flag
  DELETE /sessions/{id}

State = {graph, log, pressable, finished}.  some_order is an order, null, or
"too-large" above the search bound (computed lazily, cached per state).
"""

from __future__ import annotations

import json
import threading
import time
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from . import pressing
from .gf import FieldError
from .pressing import (
    NonPositiveLoop,
    NothingToUndo,
    PressingError,
    PressSession,
    Pseudograph,
)

DEFAULT_TTL = 86400


class SessionStore:
    """Thread-safe map from session id to (PressSession, per-session lock)."""

    def __init__(self, snapshot_dir=None, ttl: int = DEFAULT_TTL):
        self._lock = threading.Lock()
        self._sessions = {}  # id -> (session, lock, last_used)
        self._analysis_cache = {}  # id -> (log tuple, analysis dict)
        self.snapshot_dir = Path(snapshot_dir) if snapshot_dir else None
        self.ttl = ttl
        if self.snapshot_dir:
            self.snapshot_dir.mkdir(parents=True, exist_ok=True)
            self._load_snapshots()

    # -- snapshots -----------------------------------------------------------

    def _snapshot_path(self, sid: str) -> Path:
        return self.snapshot_dir / f"{sid}.json"

    def _save_snapshot(self, s: PressSession):
        if not self.snapshot_dir:
            return
        payload = {
            "id": s.id,
            "initial": s.initial.to_json(),
            "log": list(s.log),
        }
        self._snapshot_path(s.id).write_text(json.dumps(payload), encoding="utf-8")

    def _load_snapshots(self):
        for path in sorted(self.snapshot_dir.glob("*.json")):
            payload = json.loads(path.read_text(encoding="utf-8"))
            s = restore_session(payload)
            self._sessions[s.id] = (s, threading.Lock(), time.monotonic())

    # -- store API -----------------------------------------------------------

    def _purge_expired(self):
        now = time.monotonic()
        for sid in [
            sid
            for sid, (_, _, last) in self._sessions.items()
            if now - last > self.ttl
        ]:
            del self._sessions[sid]
            self._analysis_cache.pop(sid, None)
            if self.snapshot_dir:
                self._snapshot_path(sid).unlink(missing_ok=True)

    def create(self, graph: Pseudograph) -> PressSession:
        s = pressing.session_new(graph)
        with self._lock:
            self._purge_expired()
            self._sessions[s.id] = (s, threading.Lock(), time.monotonic())
        self._save_snapshot(s)
        return s

    def get(self, sid: str):
        with self._lock:
            self._purge_expired()
            entry = self._sessions.get(sid)
            if entry is None:
                raise KeyError(sid)
            s, lock, _ = entry
            self._sessions[sid] = (s, lock, time.monotonic())
            return s, lock

    def delete(self, sid: str):
        with self._lock:
            if sid not in self._sessions:
                raise KeyError(sid)
            del self._sessions[sid]
            self._analysis_cache.pop(sid, None)
        if self.snapshot_dir:
            self._snapshot_path(sid).unlink(missing_ok=True)

    def analysis(self, sid: str, s: PressSession) -> dict:
        """Lazily computed and cached per press-log state."""
        key = tuple(s.log)
        cached = self._analysis_cache.get(sid)
        if cached and cached[0] == key:
            return cached[1]
        cur = s.current
        if cur.n <= pressing.FIND_ORDER_MAX_N:
            some_order = pressing.completion_order(cur)
        else:
            some_order = "too-large"
        remaining = [v for v in range(1, cur.n + 1) if v not in s.log]
        result = {
            "pressable": cur.pressable(),
            "some_order": some_order,
            "pd_in_current_order": pressing.order_is_successful(
                s.initial, s.log + remaining
            ),
        }
        self._analysis_cache[sid] = (key, result)
        return result


def restore_session(payload: dict) -> PressSession:
    """Rebuild a session by replaying its log; snapshots round-trip exactly."""
    graph = Pseudograph.from_json(payload["initial"])
    s = PressSession(history=[graph], log=[], id=payload["id"])
    for v in payload["log"]:
        pressing.session_press(s, v)
    return s


def _state(s: PressSession) -> dict:
    cur = s.current
    return {
        "graph": cur.to_json(),
        "log": list(s.log),
        "pressable": cur.pressable(),
        "finished": cur.is_zero(),
    }


def create_app(snapshot_dir=None, ttl: int = DEFAULT_TTL, allow_origin=None) -> FastAPI:
    store = SessionStore(snapshot_dir=snapshot_dir, ttl=ttl)
    app = FastAPI(title="presslab-service")
    app.state.store = store

    if allow_origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[allow_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    def _get_session(sid: str):
        try:
            return store.get(sid)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown session")

    @app.exception_handler(PressingError)
    async def _pressing_error(_request: Request, exc: PressingError):
        # validation problems in request payloads, not press legality
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(FieldError)
    async def _field_error(_request: Request, exc: FieldError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.post("/sessions", status_code=201)
    async def create_session(request: Request):
        try:
            body = await request.json()
        except json.JSONDecodeError:
            raise HTTPException(status_code=400, detail="malformed JSON body")
        try:
            graph = Pseudograph.from_json(body)
        except (KeyError, TypeError) as e:
            raise HTTPException(status_code=400, detail=f"bad graph payload: {e}")
        s = store.create(graph)
        return {"id": s.id, "state": _state(s)}

    @app.get("/sessions/{sid}")
    async def get_session(sid: str):
        s, _ = _get_session(sid)
        return _state(s)

    @app.post("/sessions/{sid}/press")
    async def press_vertex(sid: str, request: Request):
        try:
            body = await request.json()
            vertex = body["vertex"]
        except (json.JSONDecodeError, TypeError, KeyError):
            raise HTTPException(status_code=400, detail='body must be {"vertex": i}')
        s, lock = _get_session(sid)
        with lock:
            try:
                pressing.session_press(s, vertex)
            except NonPositiveLoop as e:
                raise HTTPException(
                    status_code=409, detail=f"NonPositiveLoop: {e}"
                )
            except pressing.IndexOutOfRange as e:
                raise HTTPException(status_code=422, detail=str(e))
            store._save_snapshot(s)
            return _state(s)

    @app.post("/sessions/{sid}/undo")
    async def undo(sid: str):
        s, lock = _get_session(sid)
        with lock:
            try:
                pressing.session_undo(s)
            except NothingToUndo as e:
                raise HTTPException(status_code=409, detail=f"NothingToUndo: {e}")
            store._save_snapshot(s)
            return _state(s)

    @app.get("/sessions/{sid}/analysis")
    async def analysis(sid: str):
        s, lock = _get_session(sid)
        with lock:
            return store.analysis(sid, s)

    @app.delete("/sessions/{sid}", status_code=204)
    async def delete_session(sid: str):
        try:
            store.delete(sid)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown session")

    return app
