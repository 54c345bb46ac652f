"""File-backed persistence for sessions, settings and the solve counter.

Saves are atomic: the document is written to a sibling temp file and
renamed over the store, so a crash at any point leaves either the old
or the new store on disk, never a torn one.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Literal

from .game import ChallengeBank, GameState, Session, HANDLE_RE

STORE_VERSION = 1

LetterSpacing = Literal["normal", "wide", "wider"]
LineHeight = Literal["normal", "relaxed"]
Theme = Literal["light", "dark", "high_contrast"]


class StoreError(Exception):
    """The store file is unusable; the service must refuse to start."""


class StoreVersionError(StoreError):
    """The store was written by a different schema version."""


@dataclass
class PlayerSettings:
    """Presentation preferences; accessibility-friendly values by default."""

    dyslexia_font: bool = True
    letter_spacing: LetterSpacing = "wide"
    line_height: LineHeight = "relaxed"
    theme: Theme = "light"
    tts_enabled: bool = True

    def __post_init__(self) -> None:
        if self.letter_spacing not in ("normal", "wide", "wider"):
            raise ValueError(f"bad letter_spacing: {self.letter_spacing!r}")
        if self.line_height not in ("normal", "relaxed"):
            raise ValueError(f"bad line_height: {self.line_height!r}")
        if self.theme not in ("light", "dark", "high_contrast"):
            raise ValueError(f"bad theme: {self.theme!r}")


@dataclass
class StoreDocument:
    """Everything the service persists between requests."""

    state: GameState = field(default_factory=GameState)
    settings: dict[str, PlayerSettings] = field(default_factory=dict)
    tokens: dict[str, str] = field(default_factory=dict)  # session token -> handle
    version: int = STORE_VERSION


def _session_records(doc: StoreDocument) -> list[dict]:
    handle_to_token = {h: t for t, h in doc.tokens.items()}
    records = []
    for session in doc.state.sessions.values():
        record = asdict(session)
        record["token"] = handle_to_token.get(session.handle)
        records.append(record)
    return records


def serialize(doc: StoreDocument) -> str:
    payload = {
        "version": doc.version,
        "solve_ordinal": doc.state.solve_ordinal,
        "sessions": _session_records(doc),
        "settings": {handle: asdict(s) for handle, s in doc.settings.items()},
    }
    return json.dumps(payload, indent=2) + "\n"


def _check_sessions(doc: StoreDocument, bank: ChallengeBank) -> None:
    total_solves = 0
    for session in doc.state.sessions.values():
        if not HANDLE_RE.match(session.handle):
            raise StoreError(f"store holds an invalid handle: {session.handle!r}")
        if session.unlocked not in (1, 2, 3):
            raise StoreError(f"{session.handle}: unlocked level out of range")
        expected = 0
        for cid in session.solved:
            challenge = bank.challenges.get(cid)
            if challenge is None:
                raise StoreError(f"{session.handle}: solved unknown challenge {cid}")
            expected += challenge.points
        if session.total_score != expected:
            raise StoreError(
                f"{session.handle}: total_score {session.total_score} != sum of solved points {expected}"
            )
        total_solves += len(session.solved)
    if doc.state.solve_ordinal < total_solves:
        raise StoreError("solve counter is behind the recorded solves")


def deserialize(text: str, bank: ChallengeBank) -> StoreDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StoreError(f"corrupt store: {exc}") from exc
    if not isinstance(payload, dict):
        raise StoreError("corrupt store: not a document")

    version = payload.get("version")
    if version != STORE_VERSION:
        raise StoreVersionError(
            f"store schema version {version!r}, expected {STORE_VERSION}; migration required"
        )

    doc = StoreDocument()
    try:
        doc.state.solve_ordinal = int(payload["solve_ordinal"])
        for record in payload["sessions"]:
            session = Session(
                handle=str(record["handle"]),
                unlocked=int(record["unlocked"]),
                solved={str(k): int(v) for k, v in record["solved"].items()},
                total_score=int(record["total_score"]),
            )
            if session.handle in doc.state.sessions:
                raise StoreError(f"duplicate session handle: {session.handle}")
            doc.state.sessions[session.handle] = session
            token = record.get("token")
            if token:
                if token in doc.tokens:
                    raise StoreError("duplicate session token")
                doc.tokens[str(token)] = session.handle
        for handle, raw in payload.get("settings", {}).items():
            doc.settings[str(handle)] = PlayerSettings(**raw)
    except StoreError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise StoreError(f"corrupt store: {exc}") from exc

    _check_sessions(doc, bank)
    return doc


def load_store(path: str | Path, bank: ChallengeBank) -> StoreDocument:
    """Read and validate the store; a missing file yields a fresh document."""
    path = Path(path)
    if not path.exists():
        return StoreDocument()
    return deserialize(path.read_text(encoding="utf-8"), bank)


def save_store(path: str | Path, doc: StoreDocument) -> None:
    """Atomically replace the store file with the current document."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8") as handle:
        handle.write(serialize(doc))
        handle.flush()
        os.fsync(handle.fileno())
    os.replace(tmp, path)
