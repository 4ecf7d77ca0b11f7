"""Braid words, strand bookkeeping and the elementary rewriting moves.

A word is stored as a tuple of signed integers: ``i`` stands for the
generator sigma_i and ``-i`` for its inverse. Everything is 1-based so that
letter ``i`` swaps the strands at positions ``i`` and ``i + 1``.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Iterator, Sequence

from .errors import DataError, MoveError

HEXAGON = "hexagon"
COMMUTATION = "commutation"
FREE_DELETE = "free_delete"
FREE_INSERT = "free_insert"

# Enumeration order of move kinds at a fixed position.
KIND_ORDER = (HEXAGON, COMMUTATION, FREE_DELETE, FREE_INSERT)
RELATION_KINDS = frozenset({HEXAGON, COMMUTATION})

POS_THEN_NEG = "pn"
NEG_THEN_POS = "np"

# position_to_name: entry k-1 is the name of the strand now at position k.
StrandState = tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.n < 2:
            raise DataError(f"strand count must be at least 2, got {self.n}")
        for k, x in enumerate(self.letters):
            if x == 0 or abs(x) > self.n - 1:
                raise DataError(
                    f"letter {x} at index {k + 1} out of range for {self.n} strands", k + 1
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def to_dict(self) -> dict:
        return {"n": self.n, "letters": list(self.letters)}

    @classmethod
    def from_dict(cls, data: dict) -> "BraidWord":
        try:
            return cls(int(data["n"]), tuple(data["letters"]))
        except (KeyError, TypeError) as exc:
            raise DataError(f"malformed word object: {exc}") from None


@dataclasses.dataclass(frozen=True, order=True)
class Move:
    kind: str
    pos: int
    generator: int | None = None
    order: str | None = None

    def __post_init__(self):
        if self.kind not in KIND_ORDER:
            raise DataError(f"unknown move kind {self.kind!r}")
        if self.kind == FREE_INSERT:
            if self.generator is None or self.order not in (POS_THEN_NEG, NEG_THEN_POS):
                raise DataError("free_insert needs a generator and an order of 'pn' or 'np'")
        elif self.generator is not None or self.order is not None:
            raise DataError(f"{self.kind} takes no generator or order")

    def sort_key(self):
        order = (None, POS_THEN_NEG, NEG_THEN_POS).index(self.order)
        return (self.pos, KIND_ORDER.index(self.kind), self.generator or 0, order)

    def __str__(self) -> str:
        if self.kind == FREE_INSERT:
            return f"{self.kind}@{self.pos}[{self.generator},{self.order}]"
        return f"{self.kind}@{self.pos}"

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "pos": self.pos}
        if self.kind == FREE_INSERT:
            d["generator"] = self.generator
            d["order"] = self.order
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "Move":
        try:
            return cls(
                str(data["kind"]),
                int(data["pos"]),
                None if data.get("generator") is None else int(data["generator"]),
                data.get("order"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, DataError):
                raise
            raise DataError(f"malformed move object: {exc}") from None


def parse_word(text: str, strand_count: int | None = None) -> BraidWord:
    """Parse whitespace separated nonzero integers into a word.

    The strand count defaults to one more than the largest generator index
    (and to 2 for the empty word).
    """
    letters = []
    for k, token in enumerate(text.split()):
        try:
            x = int(token)
        except ValueError:
            raise DataError(f"token {k + 1} ({token!r}) is not an integer", k + 1) from None
        if x == 0:
            raise DataError(f"token {k + 1} is zero; generators are numbered from 1", k + 1)
        letters.append(x)
    needed = max((abs(x) for x in letters), default=1) + 1
    if strand_count is None:
        strand_count = needed
    elif strand_count < needed:
        worst = next(k for k, x in enumerate(letters) if abs(x) + 1 > strand_count)
        raise DataError(
            f"token {worst + 1} ({letters[worst]}) needs {needed} strands, got {strand_count}",
            worst + 1,
        )
    return BraidWord(strand_count, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(x) for x in w.letters)


def strand_trace(w: BraidWord) -> list[StrandState]:
    state = list(range(1, w.n + 1))
    states = [tuple(state)]
    for x in w.letters:
        i = abs(x) - 1
        state[i], state[i + 1] = state[i + 1], state[i]
        states.append(tuple(state))
    return states


def permutation_of(w: BraidWord) -> StrandState:
    state = list(range(1, w.n + 1))
    for x in w.letters:
        i = abs(x) - 1
        state[i], state[i + 1] = state[i + 1], state[i]
    return tuple(state)


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def _same_sign(x: int, y: int) -> bool:
    return (x > 0) == (y > 0)


def move_violation(letters: Sequence[int], n: int, m: Move) -> str | None:
    """Return why ``m`` does not apply to ``letters``, or None if it does."""
    L = len(letters)
    p = m.pos - 1
    if m.kind == FREE_INSERT:
        if not 1 <= m.pos <= L + 1:
            return f"free_insert position {m.pos} outside 1..{L + 1}"
        if not 1 <= m.generator <= n - 1:
            return f"free_insert generator {m.generator} outside 1..{n - 1}"
        return None
    width = 3 if m.kind == HEXAGON else 2
    if p < 0 or p + width > L:
        return f"{m.kind} at {m.pos} needs letters {m.pos}..{m.pos + width - 1}, word has {L}"
    x, y = letters[p], letters[p + 1]
    if m.kind == HEXAGON:
        z = letters[p + 2]
        if not (x == z and abs(abs(x) - abs(y)) == 1 and _same_sign(x, y)):
            return f"hexagon at {m.pos} needs s_i s_j s_i with |i-j| = 1 and equal signs"
    elif m.kind == COMMUTATION:
        if abs(abs(x) - abs(y)) < 2:
            return f"commutation at {m.pos} needs s_i s_j with |i-j| >= 2"
    elif x != -y:
        return f"free_delete at {m.pos} needs a cancelling pair s_i s_i^-1 or s_i^-1 s_i"
    return None


def is_applicable(w: BraidWord, m: Move) -> bool:
    return move_violation(w.letters, w.n, m) is None


def applicable_moves(w: BraidWord, inserts: bool = False, relations_only: bool = False) -> list[Move]:
    """All moves applicable to ``w`` in (position, kind) order.

    Free deletions are listed unless ``relations_only``; free insertions only
    when ``inserts`` is set (one per position, generator and order).
    """
    letters = w.letters
    L = len(letters)
    moves = []
    for p in range(L + 1):
        pos = p + 1
        if p + 2 < L:
            x, y = letters[p], letters[p + 1]
            if letters[p + 2] == x and abs(abs(x) - abs(y)) == 1 and _same_sign(x, y):
                moves.append(Move(HEXAGON, pos))
        if p + 1 < L:
            x, y = letters[p], letters[p + 1]
            if abs(abs(x) - abs(y)) >= 2:
                moves.append(Move(COMMUTATION, pos))
            elif x == -y and not relations_only:
                moves.append(Move(FREE_DELETE, pos))
        if inserts and not relations_only:
            for g in range(1, w.n):
                moves.append(Move(FREE_INSERT, pos, g, POS_THEN_NEG))
                moves.append(Move(FREE_INSERT, pos, g, NEG_THEN_POS))
    return moves


def apply_letters(letters: tuple[int, ...], m: Move) -> tuple[int, ...]:
    """Rewrite a raw letter tuple; the caller guarantees applicability."""
    p = m.pos - 1
    if m.kind == HEXAGON:
        x, y = letters[p], letters[p + 1]
        return letters[:p] + (y, x, y) + letters[p + 3:]
    if m.kind == COMMUTATION:
        return letters[:p] + (letters[p + 1], letters[p]) + letters[p + 2:]
    if m.kind == FREE_DELETE:
        return letters[:p] + letters[p + 2:]
    g = m.generator
    pair = (g, -g) if m.order == POS_THEN_NEG else (-g, g)
    return letters[:p] + pair + letters[p:]


def apply_move(w: BraidWord, m: Move) -> BraidWord:
    reason = move_violation(w.letters, w.n, m)
    if reason is not None:
        raise MoveError(reason)
    return BraidWord(w.n, apply_letters(w.letters, m))


def inverse_move(w: BraidWord, m: Move) -> Move:
    """The move that takes ``apply_move(w, m)`` back to ``w``."""
    if m.kind in RELATION_KINDS:
        return m
    if m.kind == FREE_INSERT:
        return Move(FREE_DELETE, m.pos)
    x = w.letters[m.pos - 1]
    return Move(FREE_INSERT, m.pos, abs(x), POS_THEN_NEG if x > 0 else NEG_THEN_POS)


def iter_words(w: BraidWord, moves: Iterable[Move]) -> Iterator[BraidWord]:
    yield w
    for m in moves:
        w = apply_move(w, m)
        yield w


@dataclasses.dataclass(frozen=True)
class Derivation:
    """A start word and a sequence of moves; the stand-in for a van Kampen diagram."""

    n: int
    start: tuple[int, ...]
    moves: tuple[Move, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "start", tuple(int(x) for x in self.start))
        object.__setattr__(self, "moves", tuple(self.moves))

    def __len__(self) -> int:
        return len(self.moves)

    @property
    def start_word(self) -> BraidWord:
        return BraidWord(self.n, self.start)

    def count(self, kind: str) -> int:
        return sum(1 for m in self.moves if m.kind == kind)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "start": list(self.start),
            "moves": [m.to_dict() for m in self.moves],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Derivation":
        try:
            n = int(data["n"])
            start = tuple(int(x) for x in data["start"])
            moves = tuple(Move.from_dict(m) for m in data["moves"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, DataError):
                raise
            raise DataError(f"malformed derivation object: {exc}") from None
        return cls(n, start, moves)
