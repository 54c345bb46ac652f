"""Level/story/score game logic: a validated challenge bank, monotone
scoring, unlimited untracked attempts, level gating and a peer scoreboard.

Deliberately NOT here: attempt counters and attempt timestamps.  A wrong
answer or a hint request leaves every persisted byte unchanged, so play
stays stress-free.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

from . import ciphers

CipherName = Literal["caesar", "vigenere", "playfair"]

CIPHER_FOR_LEVEL: dict[int, CipherName] = {1: "caesar", 2: "vigenere", 3: "playfair"}
MAX_LEVEL = 3

HANDLE_RE = re.compile(r"^[A-Za-z0-9_]{1,24}$")

DisclosureMode = Literal["full_key", "key_hint", "none"]
_DEFAULT_DISCLOSURE: dict[int, DisclosureMode] = {1: "none", 2: "full_key", 3: "full_key"}


class GameError(Exception):
    """Base class for rule violations surfaced to callers."""


class BankError(GameError):
    """The challenge bank failed to load or validate."""

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


class UnknownChallengeError(GameError):
    pass


class LockedLevelError(GameError):
    pass


class NoSuchHintError(GameError):
    pass


class InvalidHandleError(GameError):
    pass


class DuplicateHandleError(GameError):
    pass


@dataclass(frozen=True)
class Level:
    number: int
    cipher: CipherName
    title: str
    story_panel: str


@dataclass(frozen=True)
class KeyDisclosure:
    """What the player is told about the key: everything, a nudge, or nothing."""

    mode: DisclosureMode
    material: str | None = None


@dataclass(frozen=True)
class Challenge:
    id: str
    level: int
    index: int
    prompt: str
    ciphertext: str
    answer: str  # canonical normalized letters
    cipher: CipherName
    key: str
    disclosure: KeyDisclosure
    hints: tuple[str, ...]
    points: int

    @property
    def policy(self) -> ciphers.Policy:
        return "playfair" if self.cipher == "playfair" else "standard"


@dataclass(frozen=True)
class ChallengeBank:
    levels: tuple[Level, ...]
    challenges: dict[str, Challenge]

    def by_level(self, number: int) -> list[Challenge]:
        found = [c for c in self.challenges.values() if c.level == number]
        found.sort(key=lambda c: c.index)
        return found

    def level(self, number: int) -> Level | None:
        return next((lv for lv in self.levels if lv.number == number), None)


@dataclass
class Session:
    """One anonymous player.  ``solved`` maps challenge id to the global
    ordinal of its first solve; no attempt counts, no timestamps."""

    handle: str
    unlocked: int = 1
    solved: dict[str, int] = field(default_factory=dict)
    total_score: int = 0


@dataclass
class GameState:
    """All sessions plus the monotone first-solve counter used for
    scoreboard tie-breaking (a counter, not a clock)."""

    sessions: dict[str, Session] = field(default_factory=dict)
    solve_ordinal: int = 0


@dataclass(frozen=True)
class Verdict:
    correct: bool
    score_delta: int
    total_score: int
    newly_unlocked: int | None = None


@dataclass(frozen=True)
class ScoreboardEntry:
    rank: int
    handle: str
    total_score: int


def points_for(level: int, index: int) -> int:
    """Point value of a question; later levels and later questions pay more."""
    if level not in CIPHER_FOR_LEVEL:
        raise ValueError(f"no such level: {level}")
    if index < 0:
        raise ValueError("index must be >= 0")
    return 50 * level + 10 * index


def render_ciphertext(cipher: CipherName, key: str, plaintext: str) -> str:
    """Encrypt human text with the named cipher, spaced like the source."""
    if cipher == "caesar":
        text = ciphers.normalize(plaintext)
        return ciphers.regroup(ciphers.caesar_encrypt(text, int(key)), text.layout)
    if cipher == "vigenere":
        text = ciphers.normalize(plaintext)
        return ciphers.regroup(ciphers.vigenere_encrypt(text, key), text.layout)
    if cipher == "playfair":
        text = ciphers.normalize(plaintext, "playfair")
        letters, layout = ciphers.playfair_encrypt(text, key)
        return ciphers.regroup(letters, layout)
    raise ValueError(f"unknown cipher: {cipher}")


def padded_answer(challenge: Challenge) -> str | None:
    """The Playfair answer with separator/pad letters, also accepted."""
    if challenge.cipher != "playfair":
        return None
    text = ciphers.NormalizedText(challenge.answer, (len(challenge.answer),), "playfair")
    return ciphers.playfair_digraphs(text).stream


def _load_level(raw: dict, problems: list[str]) -> Level | None:
    try:
        number = int(raw["number"])
        level = Level(number, raw["cipher"], str(raw["title"]), str(raw["story"]))
    except (KeyError, TypeError, ValueError) as exc:
        problems.append(f"malformed level entry: {exc}")
        return None
    if CIPHER_FOR_LEVEL.get(level.number) != level.cipher:
        problems.append(
            f"level {level.number} must use {CIPHER_FOR_LEVEL.get(level.number)}, got {level.cipher}"
        )
        return None
    return level


def _load_challenge(raw: dict, index: int, problems: list[str]) -> Challenge | None:
    try:
        cid = str(raw["id"])
        level = int(raw["level"])
        cipher = raw["cipher"]
        key = str(raw["key"])
        plaintext = str(raw["plaintext"])
        ciphertext = str(raw["ciphertext"])
        prompt = str(raw["prompt"])
        hints = tuple(str(h) for h in raw["hints"])
    except (KeyError, TypeError, ValueError) as exc:
        problems.append(f"malformed challenge entry: {exc}")
        return None

    ok = True
    if CIPHER_FOR_LEVEL.get(level) != cipher:
        problems.append(f"{cid}: level {level} does not use {cipher}")
        ok = False
    if not hints:
        problems.append(f"{cid}: challenges need at least one hint")
        ok = False

    mode = raw.get("key_disclosure", _DEFAULT_DISCLOSURE.get(level, "none"))
    if mode not in ("full_key", "key_hint", "none"):
        problems.append(f"{cid}: unknown key_disclosure {mode!r}")
        ok = False
        mode = "none"
    if mode == "full_key":
        disclosure = KeyDisclosure("full_key", key)
    elif mode == "key_hint":
        hint_text = raw.get("key_hint")
        if not hint_text:
            problems.append(f"{cid}: key_hint disclosure needs a key_hint text")
            ok = False
        disclosure = KeyDisclosure("key_hint", hint_text)
    else:
        disclosure = KeyDisclosure("none")

    try:
        derived = render_ciphertext(cipher, key, plaintext)
    except ValueError as exc:
        problems.append(f"{cid}: cannot derive ciphertext: {exc}")
        return None
    if derived != ciphertext:
        problems.append(f"{cid}: stored ciphertext does not match the key and plaintext")
        ok = False
    if not ok:
        return None

    policy: ciphers.Policy = "playfair" if cipher == "playfair" else "standard"
    return Challenge(
        id=cid,
        level=level,
        index=index,
        prompt=prompt,
        ciphertext=ciphertext,
        answer=ciphers.normalize(plaintext, policy).letters,
        cipher=cipher,
        key=key,
        disclosure=disclosure,
        hints=hints,
        points=points_for(level, index),
    )


def bundled_bank_path() -> Path:
    """Path of the challenge bank shipped with the package."""
    from importlib import resources

    return Path(str(resources.files("cryptolexia.data").joinpath("challenge_bank.json")))


def validate_challenge_bank(source: str | Path) -> tuple[ChallengeBank | None, list[str]]:
    """Validate a bank document, returning the bank and all problems found.

    Every challenge is re-encrypted from its plaintext and key; a stored
    ciphertext that does not match is a problem naming the challenge.
    The bank is None whenever problems is non-empty.
    """
    try:
        document = json.loads(Path(source).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        return None, [f"cannot read challenge bank: {exc}"]

    problems: list[str] = []
    levels = []
    for raw in document.get("levels", []):
        level = _load_level(raw, problems)
        if level:
            levels.append(level)
    if {lv.number for lv in levels} != set(CIPHER_FOR_LEVEL) and not problems:
        problems.append("bank must define levels 1, 2 and 3")

    raw_challenges = document.get("challenges", [])
    if not raw_challenges:
        problems.append("no challenges")

    challenges: dict[str, Challenge] = {}
    next_index: dict[int, int] = {}
    for raw in raw_challenges:
        level = raw.get("level")
        index = next_index.get(level, 0)
        challenge = _load_challenge(raw, index, problems)
        if challenge is None:
            next_index[level] = index + 1
            continue
        if challenge.id in challenges:
            problems.append(f"duplicate challenge id: {challenge.id}")
            continue
        challenges[challenge.id] = challenge
        next_index[level] = index + 1

    if problems:
        return None, problems
    return ChallengeBank(tuple(sorted(levels, key=lambda lv: lv.number)), challenges), []


def load_challenge_bank(source: str | Path) -> ChallengeBank:
    """Load a bank document or raise :class:`BankError` listing every problem."""
    bank, problems = validate_challenge_bank(source)
    if bank is None:
        raise BankError(problems)
    return bank


def create_session(state: GameState, handle: str) -> Session:
    """Register a fresh anonymous player at level 1 with score 0."""
    if not HANDLE_RE.match(handle):
        raise InvalidHandleError(
            "handle must be 1-24 characters: letters, digits or underscore"
        )
    if handle in state.sessions:
        raise DuplicateHandleError(f"handle already taken: {handle}")
    session = Session(handle=handle)
    state.sessions[handle] = session
    return session


def _challenge_or_raise(bank: ChallengeBank, challenge_id: str) -> Challenge:
    challenge = bank.challenges.get(challenge_id)
    if challenge is None:
        raise UnknownChallengeError(f"no such challenge: {challenge_id}")
    return challenge


def _attempt_matches(challenge: Challenge, attempt: str) -> bool:
    letters = ciphers.normalize(attempt, challenge.policy).letters
    if letters == challenge.answer:
        return True
    return challenge.cipher == "playfair" and letters == padded_answer(challenge)


def submit_answer(
    bank: ChallengeBank, state: GameState, session: Session, challenge_id: str, attempt: str
) -> Verdict:
    """Check an attempt.  First correct solves score; everything else is free.

    Wrong answers and repeat solves change no session state at all, and
    nothing about the attempt itself is recorded anywhere.
    """
    challenge = _challenge_or_raise(bank, challenge_id)
    if challenge.level > session.unlocked:
        raise LockedLevelError(f"level {challenge.level} is still locked")

    if not _attempt_matches(challenge, attempt):
        return Verdict(False, 0, session.total_score)
    if challenge.id in session.solved:
        return Verdict(True, 0, session.total_score)

    state.solve_ordinal += 1
    session.solved[challenge.id] = state.solve_ordinal
    session.total_score += challenge.points

    newly_unlocked = None
    level_done = all(c.id in session.solved for c in bank.by_level(challenge.level))
    if level_done and challenge.level == session.unlocked and challenge.level < MAX_LEVEL:
        session.unlocked += 1
        newly_unlocked = session.unlocked
    return Verdict(True, challenge.points, session.total_score, newly_unlocked)


def get_hint(bank: ChallengeBank, challenge_id: str, hint_index: int) -> str:
    """Fetch one hint.  Free: no score penalty and no usage record."""
    challenge = _challenge_or_raise(bank, challenge_id)
    if not 0 <= hint_index < len(challenge.hints):
        raise NoSuchHintError(f"no such hint: {hint_index}")
    return challenge.hints[hint_index]


def _reached_score_at(session: Session) -> float:
    # The ordinal of the solve that brought the session to its current
    # score; sessions that scored earlier rank above later equals.
    return max(session.solved.values()) if session.solved else math.inf


def scoreboard(state: GameState, limit: int) -> list[ScoreboardEntry]:
    """Top sessions by score, ranked 1..limit, ties to whoever got there first."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    ordered = sorted(
        state.sessions.values(),
        key=lambda s: (-s.total_score, _reached_score_at(s), s.handle),
    )
    return [
        ScoreboardEntry(rank, session.handle, session.total_score)
        for rank, session in enumerate(ordered[:limit], start=1)
    ]
