"""HTTP facade over the game engine.

Every mutating request funnels through one lock and is saved to the
file-backed store before the response goes out.  The service adds no
game rules of its own; it only translates between JSON and the engine.

All errors share one body shape: ``{"error": {"code", "message"}}``.
Answers and full hint texts never appear in any response.
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import asdict
from pathlib import Path

from fastapi import Depends, FastAPI, Header, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict

from . import game
from .game import Challenge, ChallengeBank, Session
from .store import PlayerSettings, StoreDocument, load_store, save_store

DEFAULT_PORT = 8473
DEFAULT_STORE = "cryptolexia_store.json"


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": {"code": code, "message": message}})


class CreatePlayerRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    handle: str


class AnswerRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    challenge_id: str
    attempt: str


class SettingsRequest(BaseModel):
    """PUT body; omitted fields fall back to the defaults."""

    model_config = ConfigDict(extra="forbid")
    dyslexia_font: bool = True
    letter_spacing: str = "wide"
    line_height: str = "relaxed"
    theme: str = "light"
    tts_enabled: bool = True


def _session_view(session: Session) -> dict:
    return {
        "handle": session.handle,
        "unlocked": session.unlocked,
        "total_score": session.total_score,
        "solved": sorted(session.solved),
    }


def _challenge_view(challenge: Challenge, session: Session) -> dict:
    return {
        "id": challenge.id,
        "index": challenge.index,
        "prompt": challenge.prompt,
        "ciphertext": challenge.ciphertext,
        "key_disclosure": {
            "mode": challenge.disclosure.mode,
            "material": challenge.disclosure.material,
        },
        "hint_count": len(challenge.hints),
        "points": challenge.points,
        "solved": challenge.id in session.solved,
    }


def create_app(bank: ChallengeBank, store_path: str | Path) -> FastAPI:
    """Build the service around a validated bank and a store file.

    Raises ``StoreError`` (refusing to start) if the store exists but
    cannot be loaded.
    """
    store_path = Path(store_path)
    doc = load_store(store_path, bank)

    app = FastAPI(title="cryptolexia", docs_url=None, redoc_url=None)
    # the web client may be served from another origin; auth is a bearer
    # header (no cookies), so a permissive CORS policy is safe here
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.bank = bank
    app.state.doc = doc
    app.state.store_path = store_path
    app.state.lock = threading.Lock()

    def persist() -> None:
        save_store(store_path, app.state.doc)

    @app.exception_handler(ApiError)
    async def on_api_error(_request: Request, exc: ApiError) -> JSONResponse:
        return _error_response(exc.status, exc.code, exc.message)

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(_request: Request, exc: RequestValidationError) -> JSONResponse:
        first = exc.errors()[0] if exc.errors() else {}
        where = ".".join(str(p) for p in first.get("loc", ()))
        message = f"{first.get('msg', 'invalid request')} ({where})" if where else "invalid request"
        return _error_response(422, "validation", message)

    def authed_session(authorization: str | None = Header(default=None)) -> Session:
        if not authorization or not authorization.startswith("Bearer "):
            raise ApiError(401, "unauthorized", "missing bearer session token")
        token = authorization.removeprefix("Bearer ").strip()
        handle = app.state.doc.tokens.get(token)
        if handle is None:
            raise ApiError(401, "unauthorized", "unknown session token")
        return app.state.doc.state.sessions[handle]

    @app.post("/api/players", status_code=201)
    def create_player(body: CreatePlayerRequest) -> JSONResponse:
        with app.state.lock:
            try:
                session = game.create_session(app.state.doc.state, body.handle)
            except game.InvalidHandleError as exc:
                raise ApiError(422, "invalid_handle", str(exc)) from exc
            except game.DuplicateHandleError as exc:
                raise ApiError(409, "duplicate_handle", str(exc)) from exc
            token = secrets.token_hex(16)
            app.state.doc.tokens[token] = session.handle
            persist()
            return JSONResponse(
                status_code=201,
                content={"session_token": token, "session": _session_view(session)},
            )

    @app.get("/api/levels")
    def list_levels(session: Session = Depends(authed_session)) -> list[dict]:
        with app.state.lock:
            views = []
            for level in app.state.bank.levels:
                locked = level.number > session.unlocked
                views.append(
                    {
                        "number": level.number,
                        "cipher": level.cipher,
                        "title": level.title,
                        "locked": locked,
                        "story_panel": None if locked else level.story_panel,
                    }
                )
            return views

    @app.get("/api/levels/{number}/challenges")
    def list_challenges(number: int, session: Session = Depends(authed_session)) -> list[dict]:
        with app.state.lock:
            if app.state.bank.level(number) is None:
                raise ApiError(404, "no_such_level", f"no such level: {number}")
            if number > session.unlocked:
                raise ApiError(403, "locked_level", f"level {number} is still locked")
            return [_challenge_view(c, session) for c in app.state.bank.by_level(number)]

    @app.post("/api/answers")
    def submit_answer(body: AnswerRequest, session: Session = Depends(authed_session)) -> dict:
        with app.state.lock:
            try:
                verdict = game.submit_answer(
                    app.state.bank, app.state.doc.state, session, body.challenge_id, body.attempt
                )
            except game.UnknownChallengeError as exc:
                raise ApiError(404, "unknown_challenge", str(exc)) from exc
            except game.LockedLevelError as exc:
                raise ApiError(403, "locked_level", str(exc)) from exc
            persist()
            return {
                "correct": verdict.correct,
                "score_delta": verdict.score_delta,
                "total_score": verdict.total_score,
                "newly_unlocked": verdict.newly_unlocked,
            }

    @app.get("/api/challenges/{challenge_id}/hints/{hint_index}")
    def get_hint(
        challenge_id: str, hint_index: int, session: Session = Depends(authed_session)
    ) -> dict:
        with app.state.lock:
            try:
                challenge = app.state.bank.challenges[challenge_id]
            except KeyError as exc:
                raise ApiError(404, "unknown_challenge", f"no such challenge: {challenge_id}") from exc
            if challenge.level > session.unlocked:
                raise ApiError(403, "locked_level", f"level {challenge.level} is still locked")
            try:
                text = game.get_hint(app.state.bank, challenge_id, hint_index)
            except game.NoSuchHintError as exc:
                raise ApiError(404, "no_such_hint", str(exc)) from exc
            return {"text": text}

    @app.get("/api/scoreboard")
    def get_scoreboard(
        limit: int = Query(default=10, ge=1),
        session: Session = Depends(authed_session),
    ) -> list[dict]:
        with app.state.lock:
            entries = game.scoreboard(app.state.doc.state, limit)
            return [asdict(entry) for entry in entries]

    @app.get("/api/settings")
    def get_settings(session: Session = Depends(authed_session)) -> dict:
        with app.state.lock:
            settings = app.state.doc.settings.get(session.handle, PlayerSettings())
            return asdict(settings)

    @app.put("/api/settings")
    def put_settings(body: SettingsRequest, session: Session = Depends(authed_session)) -> dict:
        with app.state.lock:
            try:
                settings = PlayerSettings(**body.model_dump())
            except ValueError as exc:
                raise ApiError(422, "validation", str(exc)) from exc
            app.state.doc.settings[session.handle] = settings
            persist()
            return asdict(settings)

    return app


def run(bank_path: str | Path, store_path: str | Path, port: int = DEFAULT_PORT) -> None:
    """Load everything and serve; import of uvicorn is deferred so the
    library works without a server installed."""
    import uvicorn

    bank = game.load_challenge_bank(bank_path)
    app = create_app(bank, store_path)
    uvicorn.run(app, host="0.0.0.0", port=port)
