"""JSON-over-HTTP session service.

Exposes interactive identification sessions (a Twenty-Questions loop over
a precomputed max-gain tree) and assisted battleship games. Sessions live
in memory with an idle TTL; operations on one session are serialized by a
per-session lock, while different sessions proceed concurrently.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Any, Callable

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .coders import migc_build
from .errors import (
    ContradictoryAnswer,
    ImpossibleFleet,
    InfeasibleQuerySet,
    MigcError,
    SessionComplete,
    Solved,
    UnknownSession,
)
from .model import (
    DecisionTree,
    Distribution,
    Internal,
    Leaf,
    Node,
    QuerySet,
    query_set_from_json,
    validate_distribution,
)
from .rng import rng_for
from .scenarios.battleship import (
    ANSWER_NAMES,
    BattleshipConfig,
    BattleshipState,
    LayoutPool,
    apply_result,
    battleship_next_shot,
    build_pool,
    heatmap,
    initial_state,
)

DEFAULT_SESSION_TTL = 3600.0

_STATUS_FOR = {
    "NonPositiveMass": 400,
    "MassSumError": 400,
    "DuplicateLabel": 400,
    "OutOfRangeIndex": 400,
    "OverlappingCells": 400,
    "TooManyCells": 400,
    "InfeasibleQuerySet": 422,
    "ImpossibleFleet": 422,
    "ContradictoryAnswer": 409,
    "UnknownSession": 404,
    "SessionComplete": 410,
    "Solved": 410,
}


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _api_error(exc: MigcError) -> ApiError:
    return ApiError(_STATUS_FOR.get(exc.code, 400), exc.code, str(exc))


class _Store:
    """Thread-safe session store with lazy idle expiry."""

    def __init__(self, ttl: float, clock: Callable[[], float]):
        self.ttl = ttl
        self.clock = clock
        self._items: dict[str, tuple[Any, float]] = {}
        self._lock = threading.Lock()

    def _purge(self, now: float) -> None:
        dead = [k for k, (_, touched) in self._items.items() if now - touched > self.ttl]
        for k in dead:
            del self._items[k]

    def put(self, key: str, value: Any) -> None:
        with self._lock:
            now = self.clock()
            self._purge(now)
            self._items[key] = (value, now)

    def get(self, key: str) -> Any:
        with self._lock:
            now = self.clock()
            self._purge(now)
            if key not in self._items:
                raise UnknownSession(f"no session {key!r}")
            value, _ = self._items[key]
            self._items[key] = (value, now)
            return value


# --- request bodies -------------------------------------------------------


class DistBody(BaseModel):
    labels: list[Any]
    probs: list[float]


class QueryBody(BaseModel):
    id: int
    cells: list[list[int]]


class QuerySetBody(BaseModel):
    d: int
    unconstrained: bool = False
    queries: list[QueryBody] = Field(default_factory=list)


class CreateSessionBody(BaseModel):
    dist: DistBody
    qset: QuerySetBody


class AnswerBody(BaseModel):
    answer: int


class BattleshipConfigBody(BaseModel):
    rows: int = 10
    cols: int = 10
    fleets: list[list[int]] = Field(default_factory=lambda: [[5, 3], [5, 3]])
    layout_count: int = 3**12
    stop_rule: str = "identify"
    seed: int = 0
    dedup: bool = False


class BattleshipCreateBody(BaseModel):
    config: BattleshipConfigBody = Field(default_factory=BattleshipConfigBody)
    mode: str = "advisor"


class ResultBody(BaseModel):
    cell: list[int]
    answer: str | None = None


# --- sessions ---------------------------------------------------------------


@dataclass
class QuerySession:
    id: str
    dist: Distribution
    qset: QuerySet
    tree: DecisionTree
    node: Node
    candidates: frozenset[int]
    history: list[tuple[int, int]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def done(self) -> bool:
        return isinstance(self.node, Leaf)


def _render_query(session: QuerySession) -> dict | None:
    node = session.node
    if isinstance(node, Leaf):
        return None
    options = []
    for answer in sorted(node.children):
        cell = node.query.cells[answer] & session.candidates
        options.append(
            {
                "answer": answer,
                "labels": [session.dist.labels[i] for i in sorted(cell)],
            }
        )
    return {"query_id": node.query.id, "options": options}


def _render_result(session: QuerySession) -> dict | None:
    if not isinstance(session.node, Leaf):
        return None
    return {
        "label": session.dist.labels[session.node.symbol],
        "questions": len(session.history),
    }


def _session_payload(session: QuerySession) -> dict:
    from math import fsum

    order = sorted(session.candidates)
    total = fsum(session.dist.probs[i] for i in order)
    return {
        "id": session.id,
        "done": session.done,
        "questions_asked": len(session.history),
        "candidates": [session.dist.labels[i] for i in order],
        "posterior": [
            {"label": session.dist.labels[i], "mass": session.dist.probs[i] / total}
            for i in order
        ],
        "entropy_base_d": _entropy_floor(session),
        "query": _render_query(session),
        "result": _render_result(session),
    }


def _entropy_floor(session: QuerySession) -> float:
    from .infogain import entropy_of_masses

    return entropy_of_masses(session.dist.probs, session.qset.d)


@dataclass
class BattleshipSession:
    id: str
    pool: LayoutPool
    state: BattleshipState
    mode: str
    target: int | None
    lock: threading.Lock = field(default_factory=threading.Lock)


def _battleship_payload(session: BattleshipSession) -> dict:
    pool = session.pool
    body = {
        "id": session.id,
        "mode": session.mode,
        "rows": pool.config.rows,
        "cols": pool.config.cols,
        "layout_count": len(pool.layouts),
        "distinct_layouts": len(pool.distinct),
        "remaining": int(len(session.state.surviving)),
        "entropy_trits": session.state.entropy_trits,
        "shots": [
            {"cell": [c // pool.config.cols, c % pool.config.cols], "answer": ANSWER_NAMES[a]}
            for c, a in session.state.shots
        ],
        "done": len(session.state.surviving) == 1,
    }
    if session.mode == "oracle":
        body["target"] = session.target
    return body


def create_app(
    *, session_ttl: float = DEFAULT_SESSION_TTL, clock: Callable[[], float] = time.monotonic
) -> FastAPI:
    app = FastAPI(title="migc session service")
    sessions = _Store(session_ttl, clock)
    games = _Store(session_ttl, clock)

    @app.exception_handler(ApiError)
    async def _handle_api_error(_: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status, content={"code": exc.code, "message": exc.message}
        )

    # ---- identification sessions ----

    @app.post("/sessions")
    def create_session(body: CreateSessionBody):
        try:
            dist = validate_distribution(body.dist.labels, body.dist.probs)
            qset = query_set_from_json(body.qset.model_dump(), dist.n)
            tree = migc_build(dist, qset)
        except MigcError as exc:
            raise _api_error(exc)
        except ValueError as exc:
            raise ApiError(400, "ValueError", str(exc))
        session = QuerySession(
            id=uuid.uuid4().hex,
            dist=dist,
            qset=qset,
            tree=tree,
            node=tree.root,
            candidates=frozenset(range(dist.n)),
        )
        sessions.put(session.id, session)
        return _session_payload(session)

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        try:
            session = sessions.get(sid)
        except UnknownSession as exc:
            raise _api_error(exc)
        with session.lock:
            return _session_payload(session)

    @app.post("/sessions/{sid}/answer")
    def post_answer(sid: str, body: AnswerBody):
        try:
            session = sessions.get(sid)
        except UnknownSession as exc:
            raise _api_error(exc)
        with session.lock:
            if session.done:
                raise _api_error(SessionComplete("the symbol is already identified"))
            if not 0 <= body.answer < session.tree.arity:
                raise ApiError(
                    400,
                    "AnswerOutOfRange",
                    f"answer {body.answer} outside 0..{session.tree.arity - 1}",
                )
            node = session.node
            assert isinstance(node, Internal)
            if body.answer not in node.children:
                raise _api_error(
                    ContradictoryAnswer(
                        f"answer {body.answer} maps to an empty cell here"
                    )
                )
            session.candidates = node.query.cells[body.answer] & session.candidates
            session.history.append((node.query.id, body.answer))
            session.node = node.children[body.answer]
            return _session_payload(session)

    # ---- battleship games ----

    @app.post("/battleship")
    def create_battleship(body: BattleshipCreateBody):
        if body.mode not in ("oracle", "advisor"):
            raise ApiError(400, "ValueError", f"unknown mode {body.mode!r}")
        try:
            config = BattleshipConfig(
                rows=body.config.rows,
                cols=body.config.cols,
                fleets=tuple(tuple(f) for f in body.config.fleets),
                layout_count=body.config.layout_count,
                stop_rule=body.config.stop_rule,
                seed=body.config.seed,
                dedup=body.config.dedup,
            )
            pool = build_pool(config)
        except MigcError as exc:
            raise _api_error(exc)
        except ValueError as exc:
            raise ApiError(400, "ValueError", str(exc))
        target = None
        if body.mode == "oracle":
            target = int(rng_for(config.seed, 4).integers(0, len(pool.layouts)))
        game = BattleshipSession(
            id=uuid.uuid4().hex,
            pool=pool,
            state=initial_state(pool),
            mode=body.mode,
            target=target,
        )
        games.put(game.id, game)
        return _battleship_payload(game)

    @app.get("/battleship/{sid}")
    def get_battleship(sid: str):
        try:
            game = games.get(sid)
        except UnknownSession as exc:
            raise _api_error(exc)
        with game.lock:
            return _battleship_payload(game)

    @app.get("/battleship/{sid}/recommendation")
    def get_recommendation(sid: str):
        try:
            game = games.get(sid)
        except UnknownSession as exc:
            raise _api_error(exc)
        with game.lock:
            try:
                rec = battleship_next_shot(game.state, game.pool)
            except Solved as exc:
                raise _api_error(exc)
            cols = game.pool.config.cols
            return {
                "cell": [rec.cell // cols, rec.cell % cols],
                "probs": {
                    "hit_p1": rec.probs[0],
                    "hit_p2": rec.probs[1],
                    "miss": rec.probs[2],
                },
                "entropy_trits": rec.entropy_trits,
            }

    @app.post("/battleship/{sid}/result")
    def post_result(sid: str, body: ResultBody):
        try:
            game = games.get(sid)
        except UnknownSession as exc:
            raise _api_error(exc)
        with game.lock:
            pool = game.pool
            if len(body.cell) != 2:
                raise ApiError(400, "ValueError", "cell must be [row, col]")
            row, col = body.cell
            if not (0 <= row < pool.config.rows and 0 <= col < pool.config.cols):
                raise ApiError(400, "ValueError", f"cell {body.cell} outside the board")
            cell = row * pool.config.cols + col
            if game.mode == "oracle":
                assert game.target is not None
                answer = int(pool.answers[game.target, cell])
            else:
                if body.answer not in ANSWER_NAMES:
                    raise ApiError(
                        400,
                        "ValueError",
                        f"answer must be one of {ANSWER_NAMES} in advisor mode",
                    )
                answer = ANSWER_NAMES.index(body.answer)
            try:
                apply_result(game.state, pool, cell, answer)
            except ContradictoryAnswer as exc:
                raise _api_error(exc)
            return {
                "answer": ANSWER_NAMES[answer],
                "entropy_trits": game.state.entropy_trits,
                "remaining": int(len(game.state.surviving)),
                "done": len(game.state.surviving) == 1,
            }

    @app.get("/battleship/{sid}/heatmap")
    def get_heatmap(sid: str):
        try:
            game = games.get(sid)
        except UnknownSession as exc:
            raise _api_error(exc)
        with game.lock:
            grid = heatmap(game.state, game.pool)
            return {
                "rows": game.pool.config.rows,
                "cols": game.pool.config.cols,
                "cells": [
                    {"p1": float(p1), "p2": float(p2), "empty": float(pe)}
                    for p1, p2, pe in grid
                ],
                "entropy_trits": game.state.entropy_trits,
            }

    return app
