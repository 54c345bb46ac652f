"""Caesar, Vigenere and Playfair ciphers over lowercase letter streams.

Every cipher works on a :class:`NormalizedText`: the letters of the input
with case folded and everything that is not a letter stripped, plus the
original word lengths so ciphertext can be printed with the plaintext's
spacing (see :func:`regroup`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal

ALPHABET = "abcdefghijklmnopqrstuvwxyz"
PLAYFAIR_ALPHABET = "abcdefghiklmnopqrstuvwxyz"  # j is folded into i

Policy = Literal["standard", "playfair"]

_INDEX = {c: i for i, c in enumerate(ALPHABET)}


@dataclass(frozen=True)
class NormalizedText:
    """A lowercase letter stream plus the word lengths of the source text."""

    letters: str
    layout: tuple[int, ...]
    policy: Policy = "standard"

    def __post_init__(self) -> None:
        alphabet = PLAYFAIR_ALPHABET if self.policy == "playfair" else ALPHABET
        if any(c not in alphabet for c in self.letters):
            raise ValueError(f"letters outside the {self.policy} alphabet: {self.letters!r}")
        if sum(self.layout) != len(self.letters):
            raise ValueError("layout does not cover the letters")
        if any(n < 1 for n in self.layout):
            raise ValueError("layout entries must be >= 1")


def normalize(raw: str, policy: Policy = "standard") -> NormalizedText:
    """Fold case, drop non-letters, and record word boundaries.

    Words are whitespace-separated runs; characters that are not ASCII
    letters vanish without introducing a word break.  Under the playfair
    policy every j becomes i.  All inputs are accepted; text with no
    letters yields an empty result.
    """
    words: list[str] = []
    for word in raw.split():
        kept = [c for c in word.lower() if c in _INDEX]
        if policy == "playfair":
            kept = ["i" if c == "j" else c for c in kept]
        if kept:
            words.append("".join(kept))
    return NormalizedText("".join(words), tuple(len(w) for w in words), policy)


def regroup(letters: str, layout: tuple[int, ...] | list[int]) -> str:
    """Split ``letters`` into space-separated groups of the given lengths."""
    if sum(layout) != len(letters):
        raise ValueError(f"layout sums to {sum(layout)} but there are {len(letters)} letters")
    groups = []
    at = 0
    for n in layout:
        groups.append(letters[at : at + n])
        at += n
    return " ".join(groups)


def _check_shift(shift: int) -> int:
    if not isinstance(shift, int) or isinstance(shift, bool) or not 0 <= shift <= 25:
        raise ValueError(f"shift must be an integer in 0..25, got {shift!r}")
    return shift


def _check_letters(text: str, alphabet: str = ALPHABET) -> str:
    for c in text:
        if c not in alphabet:
            raise ValueError(f"not a letter in the active alphabet: {c!r}")
    return text


def _check_word_key(key: str, *, what: str = "key") -> str:
    if not key:
        raise ValueError(f"{what} must not be empty")
    return _check_letters(key)


def caesar_encrypt(plaintext: NormalizedText, shift: int) -> str:
    """Shift every letter forward by ``shift`` positions, wrapping at z."""
    _check_shift(shift)
    if plaintext.policy != "standard":
        raise ValueError("caesar expects standard-policy text")
    return "".join(ALPHABET[(_INDEX[c] + shift) % 26] for c in plaintext.letters)


def caesar_decrypt(ciphertext: str, shift: int) -> str:
    """Inverse of :func:`caesar_encrypt` on a bare letter sequence."""
    _check_shift(shift)
    _check_letters(ciphertext)
    return "".join(ALPHABET[(_INDEX[c] - shift) % 26] for c in ciphertext)


def vigenere_extend_key(key: str, n: int) -> str:
    """Repeat ``key`` cyclically until it is exactly ``n`` letters long."""
    _check_word_key(key)
    if n < 0:
        raise ValueError("length must be >= 0")
    return (key * (n // len(key) + 1))[:n]


def vigenere_encrypt(plaintext: NormalizedText, key: str) -> str:
    """Tableau lookup: add the repeated key to the plaintext, letter by letter."""
    _check_word_key(key)
    if plaintext.policy != "standard":
        raise ValueError("vigenere expects standard-policy text")
    extended = vigenere_extend_key(key, len(plaintext.letters))
    return "".join(
        ALPHABET[(_INDEX[p] + _INDEX[k]) % 26] for p, k in zip(plaintext.letters, extended)
    )


def vigenere_decrypt(ciphertext: str, key: str) -> str:
    """Subtract the repeated key from a bare letter sequence."""
    _check_word_key(key)
    _check_letters(ciphertext)
    extended = vigenere_extend_key(key, len(ciphertext))
    return "".join(ALPHABET[(_INDEX[c] - _INDEX[k]) % 26] for c, k in zip(ciphertext, extended))


@dataclass(frozen=True)
class PlayfairMatrix:
    """The 5x5 Playfair key square, row-major, over the 25-letter alphabet."""

    cells: str

    def __post_init__(self) -> None:
        if sorted(self.cells) != sorted(PLAYFAIR_ALPHABET):
            raise ValueError("matrix must contain each of the 25 letters exactly once")

    @cached_property
    def position_of(self) -> dict[str, tuple[int, int]]:
        return {c: divmod(i, 5) for i, c in enumerate(self.cells)}

    @property
    def rows(self) -> tuple[str, ...]:
        return tuple(self.cells[r * 5 : (r + 1) * 5] for r in range(5))

    def at(self, row: int, col: int) -> str:
        return self.cells[row * 5 + col]


def playfair_matrix(key: str) -> PlayfairMatrix:
    """Build the key square: deduplicated key first, unused letters in order.

    The key may be empty (plain alphabet fill) and may contain j, which is
    treated as i before deduplication.
    """
    _check_letters(key)
    seen: list[str] = []
    for c in key:
        c = "i" if c == "j" else c
        if c not in seen:
            seen.append(c)
    filler = [c for c in PLAYFAIR_ALPHABET if c not in seen]
    return PlayfairMatrix("".join(seen + filler))


@dataclass(frozen=True)
class DigraphPlan:
    """Letter pairs for Playfair plus a record of every padding decision.

    ``insertions`` holds the 0-based indices, in the final padded stream,
    of each separator letter inserted to break a doubled pair; ``padded``
    marks a trailing pad letter.  Removing those letters restores the
    source exactly.
    """

    pairs: tuple[str, ...]
    insertions: tuple[int, ...]
    padded: bool

    def __post_init__(self) -> None:
        for pair in self.pairs:
            if len(pair) != 2:
                raise ValueError(f"not a digraph: {pair!r}")
            if pair[0] == pair[1]:
                raise ValueError(f"digraph repeats a letter: {pair!r}")

    @property
    def stream(self) -> str:
        """The padded letter stream the pairs were cut from."""
        return "".join(self.pairs)


def _separator(for_letter: str) -> str:
    # x breaks doubled pairs and pads odd tails; q stands in when the
    # letter being separated is itself x.
    return "x" if for_letter != "x" else "q"


def playfair_digraphs(plaintext: NormalizedText) -> DigraphPlan:
    """Cut the text into digraphs, left to right, inserting separators.

    When a pair would repeat a letter a separator is inserted between the
    two, and all subsequent pairing reflows over the extended stream.  An
    odd final stream gets a trailing pad letter.
    """
    if plaintext.policy != "playfair":
        raise ValueError("playfair expects playfair-policy text")
    stream = list(plaintext.letters)
    pairs: list[str] = []
    insertions: list[int] = []
    padded = False
    i = 0
    while i < len(stream):
        if i + 1 == len(stream):
            stream.append(_separator(stream[i]))
            padded = True
        if stream[i] == stream[i + 1]:
            stream.insert(i + 1, _separator(stream[i]))
            insertions.append(i + 1)
        pairs.append(stream[i] + stream[i + 1])
        i += 2
    return DigraphPlan(tuple(pairs), tuple(insertions), padded)


def _map_pair(matrix: PlayfairMatrix, a: str, b: str, step: int) -> str:
    row_a, col_a = matrix.position_of[a]
    row_b, col_b = matrix.position_of[b]
    if col_a == col_b:
        return matrix.at((row_a + step) % 5, col_a) + matrix.at((row_b + step) % 5, col_b)
    if row_a == row_b:
        return matrix.at(row_a, (col_a + step) % 5) + matrix.at(row_b, (col_b + step) % 5)
    return matrix.at(row_a, col_b) + matrix.at(row_b, col_a)


def _adjust_layout(layout: tuple[int, ...], plan: DigraphPlan) -> tuple[int, ...]:
    # Attribute each inserted separator to the word of the letter it
    # follows, and the trailing pad to the last word, so regrouped output
    # keeps the source spacing.
    if not layout:
        return ()
    word_of: list[int] = []
    for word, length in enumerate(layout):
        word_of.extend([word] * length)
    counts = list(layout)
    inserted = set(plan.insertions)
    stream_len = len(plan.stream)
    source_at = 0
    for i in range(stream_len):
        if plan.padded and i == stream_len - 1:
            counts[-1] += 1
        elif i in inserted:
            counts[word_of[source_at - 1]] += 1
        else:
            source_at += 1
    return tuple(counts)


def playfair_encrypt(plaintext: NormalizedText, key: str) -> tuple[str, tuple[int, ...]]:
    """Encrypt digraph by digraph; returns letters plus the padded layout.

    Same column: each letter steps down (wrapping).  Same row: each steps
    right (wrapping).  Otherwise the pair forms a rectangle and each
    letter is replaced by the one in its own row at the other's column.
    The returned layout accounts for inserted and pad letters so
    :func:`regroup` reproduces the source spacing.
    """
    matrix = playfair_matrix(key)
    plan = playfair_digraphs(plaintext)
    letters = "".join(_map_pair(matrix, a, b, +1) for a, b in plan.pairs)
    return letters, _adjust_layout(plaintext.layout, plan)


def playfair_decrypt(ciphertext: str, key: str) -> str:
    """Invert the three digraph rules; pad letters are left in place.

    Stripping separators is deliberately not attempted here: it is lossy
    (a real x in the source is indistinguishable from padding) and
    presentation belongs to the caller.
    """
    _check_letters(ciphertext, PLAYFAIR_ALPHABET)
    if len(ciphertext) % 2 != 0:
        raise ValueError("playfair ciphertext must have even length")
    matrix = playfair_matrix(key)
    return "".join(
        _map_pair(matrix, ciphertext[i], ciphertext[i + 1], -1)
        for i in range(0, len(ciphertext), 2)
    )
