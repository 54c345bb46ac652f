"""Working attacks on the three ciphers: exhaustive Caesar cracking,
Vigenere key-length estimation and key recovery by per-column frequency
analysis, and Playfair digraph statistics.

All operations take bare letters-only streams; normalize input first.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .ciphers import ALPHABET, PLAYFAIR_ALPHABET, caesar_decrypt, _check_letters

ENGLISH_IOC = 0.0667
# Candidate key lengths whose mean column IoC lands within this band of
# the best candidate count as ties; the shortest wins (multiples of the
# true length score almost identically).
KEY_LENGTH_TIE_BAND = 0.005

PREVIEW_LETTERS = 40


@dataclass(frozen=True)
class LetterFrequencyTable:
    """Expected relative frequencies for a-z, normalized to sum to 1."""

    freq: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.freq) != 26:
            raise ValueError("expected 26 frequencies")
        if any(f < 0 for f in self.freq):
            raise ValueError("frequencies must be nonnegative")
        if abs(sum(self.freq) - 1.0) > 1e-9:
            raise ValueError("frequencies must sum to 1")

    @classmethod
    def from_raw(cls, values: list[float] | tuple[float, ...]) -> "LetterFrequencyTable":
        """Build a table from raw counts or frequencies, rescaling to sum 1."""
        total = sum(values)
        if total <= 0:
            raise ValueError("frequencies must have a positive sum")
        return cls(tuple(v / total for v in values))

    @classmethod
    def from_file(cls, path: str | Path) -> "LetterFrequencyTable":
        """Parse 26 whitespace-separated decimals in a-z order.

        Anything after a ``#`` is a comment.  Values are rescaled to
        sum to 1.
        """
        return cls.from_text(Path(path).read_text(encoding="utf-8"))

    @classmethod
    def from_text(cls, text: str) -> "LetterFrequencyTable":
        tokens: list[str] = []
        for line in text.splitlines():
            tokens.extend(line.split("#", 1)[0].split())
        if len(tokens) != 26:
            raise ValueError(f"expected 26 values, found {len(tokens)}")
        return cls.from_raw([float(t) for t in tokens])


@lru_cache(maxsize=1)
def english_frequencies() -> LetterFrequencyTable:
    """The bundled general-English unigram table."""
    text = resources.files("cryptolexia.data").joinpath("english_frequencies.txt").read_text()
    return LetterFrequencyTable.from_text(text)


@lru_cache(maxsize=1)
def english_fixture() -> str:
    """The bundled English sample text used by attack demos and tests."""
    return resources.files("cryptolexia.data").joinpath("english_fixture.txt").read_text()


def chi_squared_score(letters: str, table: LetterFrequencyTable | None = None) -> float:
    """Goodness of fit of the letter counts against ``table``; lower is
    more English-like."""
    if not letters:
        raise ValueError("cannot score an empty letter stream")
    _check_letters(letters)
    if table is None:
        table = english_frequencies()
    counts = Counter(letters)
    n = len(letters)
    score = 0.0
    for i, letter in enumerate(ALPHABET):
        expected = table.freq[i] * n
        observed = counts[letter]
        if expected == 0.0:
            if observed:
                return float("inf")
            continue
        score += (observed - expected) ** 2 / expected
    return score


@dataclass(frozen=True)
class ShiftCandidate:
    """One Caesar shift with its chi-squared score and a plaintext preview."""

    shift: int
    score: float
    preview: str


def caesar_crack(
    ciphertext: str, table: LetterFrequencyTable | None = None
) -> list[ShiftCandidate]:
    """Score all 26 shifts and rank them best first (ties to smaller shift)."""
    if not ciphertext:
        raise ValueError("cannot crack an empty ciphertext")
    _check_letters(ciphertext)
    candidates = []
    for shift in range(26):
        plain = caesar_decrypt(ciphertext, shift)
        candidates.append(ShiftCandidate(shift, chi_squared_score(plain, table), plain[:PREVIEW_LETTERS]))
    candidates.sort(key=lambda c: (c.score, c.shift))
    return candidates


def index_of_coincidence(letters: str) -> float:
    """Probability that two randomly chosen letters of the text are equal."""
    if len(letters) < 2:
        raise ValueError("index of coincidence needs at least 2 letters")
    _check_letters(letters)
    n = len(letters)
    counts = Counter(letters)
    return sum(f * (f - 1) for f in counts.values()) / (n * (n - 1))


def vigenere_key_length(ciphertext: str, max_len: int = 10) -> list[tuple[int, float]]:
    """Rank candidate key lengths 1..``max_len`` by mean column IoC.

    The ciphertext is split into L columns by index mod L; lengths whose
    mean column IoC is closest to English (0.0667) rank first.  Among
    near-ties (within 0.005) the smallest length wins, since multiples of
    the true length score almost the same.
    """
    if not 1 <= max_len <= 20:
        raise ValueError("max_len must be in 1..20")
    if len(ciphertext) < 2 * max_len:
        raise ValueError("ciphertext must be at least twice max_len")
    _check_letters(ciphertext)
    scored = []
    for length in range(1, max_len + 1):
        columns = [ciphertext[start::length] for start in range(length)]
        mean_ioc = sum(index_of_coincidence(col) for col in columns) / length
        scored.append((length, mean_ioc, abs(mean_ioc - ENGLISH_IOC)))
    scored.sort(key=lambda t: (t[2], t[0]))
    best_ioc = scored[0][1]
    tied = sorted((t for t in scored if abs(t[1] - best_ioc) <= KEY_LENGTH_TIE_BAND), key=lambda t: t[0])
    rest = [t for t in scored if abs(t[1] - best_ioc) > KEY_LENGTH_TIE_BAND]
    return [(length, mean_ioc) for length, mean_ioc, _ in tied + rest]


def vigenere_recover_key(
    ciphertext: str, key_len: int, table: LetterFrequencyTable | None = None
) -> str:
    """Recover the key: each column is a Caesar stream, take its best shift."""
    if key_len < 1:
        raise ValueError("key length must be >= 1")
    _check_letters(ciphertext)
    key = []
    for start in range(key_len):
        column = ciphertext[start::key_len]
        if not column:
            raise ValueError(f"column {start} is empty; ciphertext too short for key_len {key_len}")
        best = caesar_crack(column, table)[0]
        key.append(ALPHABET[best.shift])
    return "".join(key)


@dataclass(frozen=True)
class DigraphHistogram:
    """Counts of non-overlapping letter pairs in a Playfair ciphertext."""

    counts: dict[str, int]
    total: int

    def __post_init__(self) -> None:
        if self.total != sum(self.counts.values()):
            raise ValueError("total does not match the counts")
        for digraph in self.counts:
            if len(digraph) != 2 or any(c not in PLAYFAIR_ALPHABET for c in digraph):
                raise ValueError(f"not a 25-alphabet digraph: {digraph!r}")

    def most_common(self, k: int | None = None) -> list[tuple[str, int]]:
        ranked = sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))
        return ranked if k is None else ranked[:k]


def digraph_frequency(ciphertext: str) -> DigraphHistogram:
    """Histogram of consecutive non-overlapping pairs; the raw material of
    a digraph frequency attack."""
    if len(ciphertext) % 2 != 0:
        raise ValueError("digraph statistics need an even-length ciphertext")
    _check_letters(ciphertext, PLAYFAIR_ALPHABET)
    counts = Counter(ciphertext[i : i + 2] for i in range(0, len(ciphertext), 2))
    return DigraphHistogram(dict(counts), len(ciphertext) // 2)
