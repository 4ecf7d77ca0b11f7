"""Derivations, separatrix flip counts and optimality certificates.

A derivation is a start word plus a list of moves. Reading the name
sequences of its successive words row by row, the occurrences of one name
form a separatrix; two separatrices cross whenever a move swaps the order of
their names.
"""

from __future__ import annotations

import dataclasses
import json
from collections import Counter
from pathlib import Path

from .errors import DataError, DerivationError, PreconditionError
from .metric import SearchLimits, exact_distance, lower_bound
from .naming import DISJOINT, MEDIAN, SHARED, NameEntry, classify_pair, move_delta
from .words import (
    HEXAGON,
    BraidWord,
    Derivation,
    Move,
    move_violation,
    apply_letters,
)

PROP1_LEFT = "prop1_left"
PROP1_RIGHT = "prop1_right"
LCM_RIGHT = "lcm_right"
FAMILIES = (PROP1_LEFT, PROP1_RIGHT, LCM_RIGHT)

FLIP_CRITERION = "flip_criterion"
BOUND_MATCH = "bound_match"


def validate_derivation(d: Derivation) -> list[BraidWord]:
    try:
        w = BraidWord(d.n, d.start)
    except DataError as exc:
        raise DerivationError(f"start word: {exc}", 0) from None
    words = [w]
    for k, m in enumerate(d.moves, 1):
        reason = move_violation(w.letters, w.n, m)
        if reason is not None:
            raise DerivationError(f"move {k} ({m}): {reason}", k)
        w = BraidWord(w.n, apply_letters(w.letters, m))
        words.append(w)
    return words


def end_word(d: Derivation) -> BraidWord:
    return validate_derivation(d)[-1]


def load_derivation(path: str | Path) -> Derivation:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot read derivation {path}: {exc}") from None
    if not isinstance(data, dict):
        raise DataError(f"{path}: expected a JSON object")
    return Derivation.from_dict(data)


def dump_derivation(d: Derivation) -> str:
    return json.dumps(d.to_dict(), separators=(", ", ": ")) + "\n"


# -- separatrices -----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class SeparatrixReport:
    # only pairs that flip at least once; keys are (x, y) with x < y
    flip_counts: dict
    totals: dict
    max_flip_count: int

    def flips(self, x: NameEntry, y: NameEntry) -> int:
        return self.flip_counts.get((x, y) if x <= y else (y, x), 0)

    def to_dict(self) -> dict:
        return {
            "flips": [
                {"pair": [str(x), str(y)], "count": c}
                for (x, y), c in sorted(self.flip_counts.items())
            ],
            "totals": dict(sorted(self.totals.items())),
            "max_flip_count": self.max_flip_count,
        }


def positive_words(d: Derivation) -> list[BraidWord]:
    words = validate_derivation(d)
    if not all(w.is_positive for w in words):
        raise PreconditionError("separatrix analysis needs positive words throughout")
    return words


def separatrix_report(d: Derivation) -> SeparatrixReport:
    words = positive_words(d)
    counts: Counter = Counter()
    names = None
    for w, m in zip(words, d.moves):
        delta = move_delta(w, m, names)
        counts.update(delta.flipped_pairs)
        names = delta.after
    totals = Counter({DISJOINT: 0, SHARED: 0, MEDIAN: 0})
    for pair, c in counts.items():
        cat = classify_pair(*pair)
        totals[cat] += c
        if cat == MEDIAN:
            totals[SHARED] += c
    return SeparatrixReport(dict(counts), dict(totals), max(counts.values(), default=0))


# -- certificates -----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Certificate:
    optimal: bool
    length: int
    method: str | None = None
    gap: int | None = None

    def __str__(self) -> str:
        if self.optimal:
            return f"certified_optimal {self.length} ({self.method})"
        return f"inconclusive gap={self.gap}"

    def to_dict(self) -> dict:
        if self.optimal:
            return {"status": "certified_optimal", "distance": self.length, "method": self.method}
        return {"status": "inconclusive", "length": self.length, "gap": self.gap}


def optimality_certificate(d: Derivation, report: SeparatrixReport | None = None) -> Certificate:
    """Try to prove that ``d`` is as short as possible.

    If no two separatrices cross twice, every flip is an endpoint inversion,
    so the move count equals the disjoint plus median inversion count.
    Otherwise fall back to comparing the length with the inversion bound.
    ``report`` may be passed when the separatrix report is already known.
    """
    words = positive_words(d)
    k = len(d)
    if report is None:
        report = separatrix_report(d)
    if report.max_flip_count <= 1:
        return Certificate(True, k, FLIP_CRITERION)
    lb = lower_bound(words[0], words[-1])
    best = max(lb.bound, lb.bound_simple)
    if k == best:
        return Certificate(True, k, BOUND_MATCH)
    return Certificate(False, k, gap=k - best)


# -- word families ----------------------------------------------------------

def family_word(kind: str, m: int) -> BraidWord:
    """The three-strand words of length 6m used for the 4m^2 examples.

    prop1_left is s1^2m (s2 s1^2 s2)^m, prop1_right is (s2 s1^2 s2)^m s1^2m
    and lcm_right is s2^2m (s1 s2^2 s1)^m.
    """
    if m < 1:
        raise PreconditionError(f"m must be at least 1, got {m}")
    if kind == PROP1_LEFT:
        letters = (1,) * (2 * m) + (2, 1, 1, 2) * m
    elif kind == PROP1_RIGHT:
        letters = (2, 1, 1, 2) * m + (1,) * (2 * m)
    elif kind == LCM_RIGHT:
        letters = (2,) * (2 * m) + (1, 2, 2, 1) * m
    else:
        raise DataError(f"unknown family {kind!r}; choose from {', '.join(FAMILIES)}")
    return BraidWord(3, letters)


# 1 1 2 1 1 2 -> 2 1 1 2 1 1, offsets from the window start
_WINDOW_MACRO = (1, 0, 3, 2)


def grid_derivation(m: int) -> Derivation:
    """4m^2 hexagons taking prop1_left(m) to prop1_right(m).

    Each s1^2 chunk, rightmost first, is pushed right across all m blocks
    s2 s1^2 s2 by a four-hexagon macro that stays inside a six-letter window.
    """
    if m < 1:
        raise PreconditionError(f"m must be at least 1, got {m}")
    moves = []
    for chunk in reversed(range(m)):
        start = 2 * chunk + 1
        for block in range(m):
            s = start + 4 * block
            moves.extend(Move(HEXAGON, s + off) for off in _WINDOW_MACRO)
    return Derivation(3, family_word(PROP1_LEFT, m).letters, tuple(moves))


def lcm_derivation(m: int, limits: SearchLimits | None = None):
    """Shortest derivation from prop1_left(m) to lcm_right(m), by search.

    Returns a Derivation, or the non-exact DistanceResult when limits bind.
    """
    res = exact_distance(family_word(PROP1_LEFT, m), family_word(LCM_RIGHT, m), limits)
    return res.witness if res.is_exact else res
