"""HTTP session API backing interactive play.

Sessions live in memory with an idle-eviction timeout; after every call the
state either leaves the human to move or the game is over, because pending
engine replies are applied inside the same call.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.exceptions import RequestValidationError
from fastapi.requests import Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .codec import parse_graph6
from .engine import (
    ALICE,
    BOB,
    GameState,
    SubsetSolver,
    _apply_unchecked,
    legal_moves,
    new_game,
)
from .graph import bits, make_graph
from .policy import POLICIES, EnginePolicy

DEFAULT_SESSION_TIMEOUT = 30 * 60.0

CUT_VERTEX_EXPLANATION = "vertex is a cut vertex of the current graph"


class NewSessionBody(BaseModel):
    graph6: str | None = None
    n: int | None = None
    edges: list[tuple[int, int]] | None = None
    weights: list[int]
    human_side: str = ALICE
    engine_policy: str = "optimal"


class MoveBody(BaseModel):
    vertex: int


@dataclass
class Session:
    id: str
    state: GameState
    human_side: str
    policy: EnginePolicy
    solver: SubsetSolver
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)


class SessionStore:
    def __init__(self, timeout: float):
        self.timeout = timeout
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def _evict_expired(self) -> None:
        now = time.monotonic()
        stale = [k for k, s in self._sessions.items() if now - s.last_access > self.timeout]
        for k in stale:
            del self._sessions[k]

    def add(self, session: Session) -> None:
        with self._lock:
            self._evict_expired()
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        with self._lock:
            self._evict_expired()
            session = self._sessions.get(session_id)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session")
            session.last_access = time.monotonic()
            return session

    def delete(self, session_id: str) -> None:
        with self._lock:
            self._evict_expired()
            if session_id not in self._sessions:
                raise HTTPException(status_code=404, detail="unknown session")
            del self._sessions[session_id]

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)


def state_payload(s: GameState) -> dict:
    over = s.game_over
    if over:
        winner = ALICE if s.alice_score >= s.bob_score else BOB
        legal: list[int] = []
    else:
        winner = None
        legal = list(bits(legal_moves(s)))
    return {
        "n": s.graph.n,
        "edges": [list(e) for e in s.graph.edges()],
        "weights": list(s.weights),
        "remaining": list(bits(s.remaining)),
        "scores": {"alice": s.alice_score, "bob": s.bob_score},
        "to_move": None if over else s.to_move,
        "legal_moves": legal,
        "transcript": [{"side": side, "vertex": v} for side, v in s.transcript],
        "game_over": over,
        "winner": winner,
    }


def _engine_side(human_side: str) -> str:
    return BOB if human_side == ALICE else ALICE


def _run_engine(session: Session) -> None:
    engine = _engine_side(session.human_side)
    while not session.state.game_over and session.state.to_move == engine:
        v = session.policy.move(session.state)
        session.state = _apply_unchecked(session.state, v)


def create_app(session_timeout: float = DEFAULT_SESSION_TIMEOUT, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="graphgrab session API")
    store = SessionStore(session_timeout)
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed input"})

    @app.post("/api/session")
    def create_session(body: NewSessionBody):
        if body.human_side not in (ALICE, BOB):
            raise HTTPException(status_code=400, detail="human_side must be alice or bob")
        if body.engine_policy not in POLICIES:
            raise HTTPException(status_code=400, detail="engine_policy must be optimal or paper")
        try:
            if body.graph6 is not None:
                if body.n is not None or body.edges is not None:
                    raise ValueError("give either graph6 or n+edges, not both")
                g = parse_graph6(body.graph6)
            elif body.n is not None:
                g = make_graph(body.n, body.edges or [])
            else:
                raise ValueError("missing graph: give graph6 or n+edges")
            state = new_game(g, body.weights)
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e)) from None
        solver = SubsetSolver(g)
        session = Session(
            id=secrets.token_hex(8),
            state=state,
            human_side=body.human_side,
            policy=EnginePolicy(body.engine_policy, _engine_side(body.human_side), solver),
            solver=solver,
        )
        with session.lock:
            _run_engine(session)
        store.add(session)
        return {"session_id": session.id, "state": state_payload(session.state)}

    @app.get("/api/session/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return {"state": state_payload(session.state)}

    @app.post("/api/session/{session_id}/move")
    def post_move(session_id: str, body: MoveBody):
        session = store.get(session_id)
        with session.lock:
            s = session.state
            if s.game_over:
                raise HTTPException(status_code=409, detail="game is over")
            if s.to_move != session.human_side:
                raise HTTPException(status_code=409, detail="not your turn")
            v = body.vertex
            if not 0 <= v < s.graph.n or not s.remaining >> v & 1:
                raise HTTPException(status_code=409, detail=f"vertex {v} is not on the board")
            if not legal_moves(s) >> v & 1:
                raise HTTPException(status_code=409, detail=CUT_VERTEX_EXPLANATION)
            session.state = _apply_unchecked(s, v)
            _run_engine(session)
            return {"state": state_payload(session.state)}

    @app.get("/api/session/{session_id}/analysis")
    def get_analysis(session_id: str):
        session = store.get(session_id)
        with session.lock:
            s = session.state
            if s.game_over:
                return []
            out = []
            for v in bits(legal_moves(s)):
                rest = s.remaining ^ (1 << v)
                value = s.weights[v] - session.solver.value(s.weights, rest)
                out.append({"vertex": v, "value_after_move": value})
            return out

    @app.delete("/api/session/{session_id}")
    def delete_session(session_id: str):
        store.delete(session_id)
        return {}

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
