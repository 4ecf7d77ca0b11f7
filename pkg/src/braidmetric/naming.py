"""Crossing names.

Every letter of a word is labelled by the pair of strands it crosses (named
by their initial positions), the rank of that crossing among the crossings
of the same pair, and its sign. For signed words the rank counts crossings
algebraically: a positive crossing gets ``L + 1`` and a negative one gets
``L`` where ``L`` is the running linking count of the pair.
"""

from __future__ import annotations

import dataclasses
import re
from collections import Counter

from .errors import ConsistencyError, DataError, PreconditionError
from .words import (
    COMMUTATION,
    FREE_INSERT,
    HEXAGON,
    BraidWord,
    Move,
    apply_move,
)

REVERSE_3 = "reverse_3"
REVERSE_2 = "reverse_2"
INSERT_PAIR = "insert_pair"
DELETE_PAIR = "delete_pair"

DISJOINT = "disjoint"
SHARED = "shared"
MEDIAN = "median"
SAME_PAIR = "same_pair"


@dataclasses.dataclass(frozen=True, order=True)
class NameEntry:
    p: int
    q: int
    a: int
    sign: int = 1

    def __post_init__(self):
        if not self.p < self.q:
            raise DataError(f"name pair must satisfy p < q, got ({self.p},{self.q})")
        if self.sign not in (1, -1):
            raise DataError(f"name sign must be +1 or -1, got {self.sign}")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.p, self.q)

    def __str__(self) -> str:
        s = f"N({self.p},{self.q},{self.a})"
        return s if self.sign == 1 else s + "^-1"

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "a": self.a, "sign": self.sign}

    @classmethod
    def from_dict(cls, data: dict) -> "NameEntry":
        return cls(int(data["p"]), int(data["q"]), int(data["a"]), int(data.get("sign", 1)))


_NAME_RE = re.compile(r"^N\((\d+),(\d+),(-?\d+)\)(\^-1)?$")


def parse_name(text: str) -> NameEntry:
    m = _NAME_RE.match(text.replace(" ", ""))
    if not m:
        raise DataError(f"cannot parse name {text!r}; expected N(p,q,a) or N(p,q,a)^-1")
    return NameEntry(int(m[1]), int(m[2]), int(m[3]), -1 if m[4] else 1)


@dataclasses.dataclass(frozen=True)
class NameSequence:
    n: int
    entries: tuple[NameEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.entries)

    def to_list(self) -> list[dict]:
        return [e.to_dict() for e in self.entries]


def signed_name_sequence(w: BraidWord) -> NameSequence:
    state = list(range(1, w.n + 1))
    link: dict[tuple[int, int], int] = {}
    out = []
    for x in w.letters:
        i = abs(x) - 1
        u, v = state[i], state[i + 1]
        pair = (u, v) if u < v else (v, u)
        L = link.get(pair, 0)
        if x > 0:
            out.append(NameEntry(pair[0], pair[1], L + 1, 1))
            link[pair] = L + 1
        else:
            out.append(NameEntry(pair[0], pair[1], L, -1))
            link[pair] = L - 1
        state[i], state[i + 1] = v, u
    return NameSequence(w.n, tuple(out))


def name_sequence(w: BraidWord) -> NameSequence:
    """Names of a positive word; the rank is simply the crossing count so far."""
    if not w.is_positive:
        raise PreconditionError("name_sequence needs a positive word; use signed_name_sequence")
    return signed_name_sequence(w)


def name_multiset(w: BraidWord) -> Counter:
    return Counter(signed_name_sequence(w).entries)


def classify_pair(x: NameEntry, y: NameEntry) -> str:
    """Category of an unordered pair of names by the strands they share.

    A ``median`` pair shares one strand that lies strictly between the two
    others; ``shared`` means one common strand that is the minimum or maximum.
    """
    common = {x.p, x.q} & {y.p, y.q}
    if len(common) == 2:
        return SAME_PAIR
    if not common:
        return DISJOINT
    (s,) = common
    lo, hi = sorted({x.p, x.q, y.p, y.q} - common)
    return MEDIAN if lo < s < hi else SHARED


def unordered(x: NameEntry, y: NameEntry) -> tuple[NameEntry, NameEntry]:
    return (x, y) if x <= y else (y, x)


@dataclasses.dataclass(frozen=True)
class MoveDelta:
    kind: str
    description: str
    # 1-based, inclusive, in the entry indexing of the longer of the two sequences
    affected_range: tuple[int, int]
    flipped_pairs: frozenset
    before: NameSequence
    after: NameSequence


def move_delta(w: BraidWord, m: Move, before: NameSequence | None = None) -> MoveDelta:
    """Compare the names of ``w`` and ``w`` rewritten by ``m``.

    The sequence after the move is recomputed from scratch (``before`` may be
    supplied when walking a derivation) and the difference is checked against
    the only shapes a single move may produce. Any other outcome raises
    ConsistencyError.
    """
    w2 = apply_move(w, m)
    s1 = (before if before is not None else signed_name_sequence(w)).entries
    s2 = signed_name_sequence(w2).entries
    p = m.pos - 1

    def fail(msg):
        raise ConsistencyError(f"{m} on {w.letters}: {msg}; before {s1}, after {s2}")

    if m.kind in (HEXAGON, COMMUTATION):
        width = 3 if m.kind == HEXAGON else 2
        block = s1[p:p + width]
        if s2[:p] != s1[:p] or s2[p + width:] != s1[p + width:]:
            fail("entries outside the rewritten letters changed")
        if s2[p:p + width] != block[::-1]:
            fail("rewritten entries are not a reversal")
        flipped = frozenset(
            unordered(block[i], block[j]) for i in range(width) for j in range(i + 1, width)
        )
        cats = sorted(classify_pair(*pr) for pr in flipped)
        if m.kind == HEXAGON:
            strands = {s for e in block for s in e.pair}
            if len(strands) != 3 or cats != sorted([MEDIAN, SHARED, SHARED]):
                fail("hexagon must flip three shared pairs on three strands, one of them median")
            # the two non-median pairs share the minimum and the maximum strand
            shared_on = sorted(
                ({a.p, a.q} & {b.p, b.q}).pop() for a, b in flipped
            )
            if shared_on != sorted(strands):
                fail("flipped pairs must share min, median and max strand once each")
            desc = REVERSE_3
        else:
            if cats != [DISJOINT]:
                fail("commutation must flip one disjoint pair")
            desc = REVERSE_2
        return MoveDelta(m.kind, desc, (m.pos, m.pos + width - 1), flipped,
                         NameSequence(w.n, s1), NameSequence(w.n, s2))

    longer, shorter = (s2, s1) if m.kind == FREE_INSERT else (s1, s2)
    if longer[:p] != shorter[:p] or longer[p + 2:] != shorter[p:]:
        fail("entries outside the cancelling pair changed")
    x, y = longer[p], longer[p + 1]
    if not (x.pair == y.pair and x.a == y.a and x.sign == -y.sign):
        fail("inserted or deleted entries are not a cancelling pair")
    desc = INSERT_PAIR if m.kind == FREE_INSERT else DELETE_PAIR
    return MoveDelta(m.kind, desc, (m.pos, m.pos + 1), frozenset(),
                     NameSequence(w.n, s1), NameSequence(w.n, s2))
