"""HTTP session service for interactive play.

The service holds live game sessions in memory and answers every request by
replaying or extending the session's move list through the game library; no
rule logic lives here.  Responses carry the configuration, per-vertex
statuses, legal moves, and derived views (current word and coset membership,
inversion set, tableau for single-source path boards).
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from contextlib import asynccontextmanager
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from kostant.diagrams import DynkinDiagram, IllegalRank, build_diagram
from kostant.game import (
    Configuration,
    GameBoard,
    classic_start,
    fire,
    legal_moves,
    status,
)
from kostant.tableaux import Tableau, play_to_tableau
from kostant.weyl import element_of, inversion_set, is_min_rep, length


class CreateSessionBody(BaseModel):
    family: str
    rank: int
    sources: list[int] = []
    mode: str = "modified"
    start_vertex: int | None = None


class MoveBody(BaseModel):
    vertex: int


@dataclass
class Session:
    id: str
    diagram: DynkinDiagram
    board: GameBoard
    start: Configuration
    moves: list[int] = field(default_factory=list)
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def replay(self) -> Configuration:
        c = self.start
        for v in self.moves:
            c = fire(self.board, c, v)
        return c


class SessionStore:
    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return session

    def snapshot(self, path: str) -> None:
        with self._lock:
            payload = [
                {
                    "id": s.id,
                    "diagram": s.diagram.to_json(),
                    "sources": sorted(s.board.sources),
                    "mode": s.board.mode,
                    "start": list(s.start),
                    "moves": list(s.moves),
                }
                for s in self._sessions.values()
            ]
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True)

    def restore(self, path: str) -> None:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
        for entry in payload:
            d = DynkinDiagram.from_json(entry["diagram"])
            board = GameBoard.from_diagram(d, entry["sources"], mode=entry["mode"])
            session = Session(
                id=entry["id"],
                diagram=d,
                board=board,
                start=tuple(entry["start"]),
                moves=list(entry["moves"]),
            )
            self.add(session)


def _word_view(session: Session) -> dict:
    d = session.diagram
    word = tuple(reversed(session.moves))
    w = element_of(word, d)
    j_set = frozenset(v for v in d.vertices if v not in session.board.sources)
    return {
        "word": list(word),
        "length": length(w, d),
        "in_coset_quotient": is_min_rep(w, j_set, d),
        "matrix": [list(row) for row in w.matrix],
    }


def _tableau_view(session: Session) -> dict | None:
    d = session.diagram
    if d.family != "A" or len(session.board.sources) != 1:
        return None
    k = next(iter(session.board.sources))
    t: Tableau = play_to_tableau(tuple(session.moves), k, d.rank + 1)
    return {"k": k, "n": d.rank + 1, "rows": t.to_json()}


def _state_view(session: Session) -> dict:
    board = session.board
    c = session.replay()
    word = _word_view(session)
    view = {
        "id": session.id,
        "board": {
            "family": session.diagram.family,
            "rank": session.diagram.rank,
            "arrows": session.diagram.to_json()["arrows"],
            "sources": sorted(board.sources),
            "mode": board.mode,
        },
        "configuration": list(c),
        "statuses": {str(v): status(board, c, v).value for v in board.vertices},
        "legal_moves": list(legal_moves(board, c)),
        "terminal": not legal_moves(board, c),
        "moves": list(session.moves),
        "word": word,
    }
    tableau = _tableau_view(session)
    if tableau is not None:
        view["tableau"] = tableau
    return view


def create_app(snapshot_path: str | None = None) -> FastAPI:
    store = SessionStore()

    @asynccontextmanager
    async def lifespan(_: FastAPI):
        if snapshot_path:
            try:
                store.restore(snapshot_path)
            except FileNotFoundError:
                pass
        yield
        if snapshot_path:
            store.snapshot(snapshot_path)

    app = FastAPI(title="kostant session service", lifespan=lifespan)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody) -> dict:
        try:
            d = build_diagram(body.family, body.rank)
        except IllegalRank as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        sources = frozenset(body.sources)
        if any(v not in d.vertices for v in sources):
            raise HTTPException(status_code=400, detail="source vertex out of range")
        if body.mode == "modified":
            board = GameBoard.from_diagram(d, sources, mode="modified")
            start = board.zero_configuration()
        elif body.mode == "classic":
            if sources:
                raise HTTPException(status_code=400, detail="classic mode has no sources")
            if body.start_vertex is None:
                raise HTTPException(status_code=400, detail="classic mode needs start_vertex")
            board = GameBoard.from_diagram(d)
            try:
                start = classic_start(board, body.start_vertex)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
        else:
            raise HTTPException(status_code=400, detail=f"unknown mode {body.mode!r}")
        session = Session(
            id=uuid.uuid4().hex, diagram=d, board=board, start=start
        )
        store.add(session)
        return _state_view(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            return _state_view(session)

    @app.post("/sessions/{session_id}/moves")
    def post_move(session_id: str, body: MoveBody) -> dict:
        session = store.get(session_id)
        with session.lock:
            c = session.replay()
            moves = legal_moves(session.board, c)
            if body.vertex not in moves:
                st = (
                    status(session.board, c, body.vertex).value
                    if body.vertex in session.board.vertices
                    else "absent"
                )
                raise HTTPException(
                    status_code=409,
                    detail={"reason": "vertex is not sad", "status": st},
                )
            session.moves.append(body.vertex)
            session.updated = time.time()
            return _state_view(session)

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            if not session.moves:
                raise HTTPException(status_code=409, detail="already at the start")
            session.moves.pop()
            session.updated = time.time()
            return _state_view(session)

    @app.get("/sessions/{session_id}/views/{view_name}")
    def get_view(session_id: str, view_name: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            if view_name == "word":
                return _word_view(session)
            if view_name == "inversions":
                d = session.diagram
                w = element_of(tuple(reversed(session.moves)), d)
                inv = sorted(inversion_set(w, d))
                return {"inversions": [list(a) for a in inv], "count": len(inv)}
            if view_name == "tableau":
                t = _tableau_view(session)
                if t is None:
                    raise HTTPException(
                        status_code=400,
                        detail="tableau view needs a type-A board with one source",
                    )
                return t
            if view_name == "dfa":
                from kostant.automaton import build_dfa, to_json

                d = session.diagram
                j_set = frozenset(
                    v for v in d.vertices if v not in session.board.sources
                )
                return to_json(build_dfa(d, j_set))
        raise HTTPException(status_code=404, detail=f"unknown view {view_name!r}")

    return app
