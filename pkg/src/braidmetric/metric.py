"""Equivalence, exact combinatorial distance and inversion lower bounds.

Distances count relation moves (hexagon and commutation) between positive
words, found by breadth-first search over the finite class of words that
share a length and a braid. The lower bound compares the name sequences of
the two endpoints: every relation move flips a known number of name pairs
of each kind, so counting inverted pairs bounds the number of moves.
"""

from __future__ import annotations

import dataclasses
import math
import os
import random
from typing import Callable, Iterator

import numpy as np

from .errors import ConsistencyError, DataError, PreconditionError
from .naming import name_multiset, name_sequence
from .words import (
    COMMUTATION,
    FREE_DELETE,
    FREE_INSERT,
    HEXAGON,
    NEG_THEN_POS,
    POS_THEN_NEG,
    BraidWord,
    Derivation,
    Move,
    applicable_moves,
    apply_move,
    exponent_sum,
    inverse_move,
    permutation_of,
)

EXACT = "exact"
NOT_EQUIVALENT = "not_equivalent"
UNKNOWN = "unknown"

ENV_MAX_STATES = "BRAIDMETRIC_MAX_STATES"


@dataclasses.dataclass(frozen=True)
class SearchLimits:
    max_states: int = 10**7
    max_depth: int | None = None
    max_word_length: int | None = None

    def __post_init__(self):
        for name in ("max_states", "max_depth", "max_word_length"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise DataError(f"{name} must be positive, got {v}")

    @classmethod
    def from_env(cls, **overrides) -> "SearchLimits":
        """Defaults, then the environment, then explicit non-None overrides."""
        kw = {}
        env = os.environ.get(ENV_MAX_STATES)
        if env:
            try:
                kw["max_states"] = int(env)
            except ValueError:
                raise DataError(f"{ENV_MAX_STATES}={env!r} is not an integer") from None
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kw)


@dataclasses.dataclass(frozen=True)
class Unknown:
    reason: str


@dataclasses.dataclass(frozen=True)
class DistanceResult:
    status: str
    distance: int | None = None
    witness: Derivation | None = None
    reason: str | None = None

    @property
    def is_exact(self) -> bool:
        return self.status == EXACT

    def to_dict(self) -> dict:
        d = {"status": self.status}
        if self.status == EXACT:
            d["distance"] = self.distance
            d["witness"] = self.witness.to_dict()
        if self.reason is not None:
            d["reason"] = self.reason
        return d


# -- search -----------------------------------------------------------------

# A compact move record used inside the search: (kind, pos, generator, order).
_Step = tuple
Neighbours = Callable[[tuple], Iterator[tuple[_Step, tuple]]]


def _relation_neighbours(w: tuple) -> Iterator[tuple[_Step, tuple]]:
    # Same order as applicable_moves: position ascending, hexagon first.
    L = len(w)
    for p in range(L - 1):
        x, y = w[p], w[p + 1]
        d = abs(abs(x) - abs(y))
        if d == 1:
            if p + 2 < L and w[p + 2] == x and (x > 0) == (y > 0):
                yield (HEXAGON, p + 1, None, None), w[:p] + (y, x, y) + w[p + 3:]
        elif d >= 2:
            yield (COMMUTATION, p + 1, None, None), w[:p] + (y, x) + w[p + 2:]


def _general_neighbours(n: int, cap: int) -> Neighbours:
    gens = range(1, n)

    def neighbours(w):
        L = len(w)
        grow = L + 2 <= cap
        for p in range(L + 1):
            if p + 1 < L:
                x, y = w[p], w[p + 1]
                d = abs(abs(x) - abs(y))
                if d == 1:
                    if p + 2 < L and w[p + 2] == x and (x > 0) == (y > 0):
                        yield (HEXAGON, p + 1, None, None), w[:p] + (y, x, y) + w[p + 3:]
                elif d >= 2:
                    yield (COMMUTATION, p + 1, None, None), w[:p] + (y, x) + w[p + 2:]
                elif x == -y:
                    yield (FREE_DELETE, p + 1, None, None), w[:p] + w[p + 2:]
            if grow:
                for g in gens:
                    yield (FREE_INSERT, p + 1, g, POS_THEN_NEG), w[:p] + (g, -g) + w[p:]
                    yield (FREE_INSERT, p + 1, g, NEG_THEN_POS), w[:p] + (-g, g) + w[p:]

    return neighbours


def _forward_moves(parents: dict, node: tuple) -> list[Move]:
    out = []
    while parents[node] is not None:
        prev, step, _ = parents[node]
        out.append(Move(*step))
        node = prev
    out.reverse()
    return out


def _backward_moves(n: int, parents: dict, node: tuple) -> list[Move]:
    # parents[node] = (prev, step) with node = step applied to prev, prev nearer the target.
    out = []
    while parents[node] is not None:
        prev, step, _ = parents[node]
        out.append(inverse_move(BraidWord(n, prev), Move(*step)))
        node = prev
    return out


def _search(
    n: int,
    src: tuple,
    dst: tuple,
    neighbours: Neighbours,
    limits: SearchLimits,
    bidirectional: bool = True,
    exhausted_reason: str | None = None,
) -> DistanceResult:
    """Shortest path from ``src`` to ``dst`` in the move graph.

    Level-synchronous: a whole layer is expanded before the meeting test, so
    the bidirectional and single-source variants return the same length.
    ``exhausted_reason`` turns an exhausted search into Unknown instead of
    NotEquivalent (used when the graph was truncated).
    """
    if src == dst:
        return DistanceResult(EXACT, 0, Derivation(n, src))
    fwd = {src: None}
    bwd = {dst: None}
    ffront, bfront = [src], [dst]
    fdepth = bdepth = 0
    max_depth = limits.max_depth
    while ffront and (bfront or not bidirectional):
        if max_depth is not None and fdepth + bdepth >= max_depth:
            return DistanceResult(UNKNOWN, reason=f"max_depth {max_depth} reached")
        forward = not bidirectional or len(ffront) <= len(bfront)
        if forward:
            this, other, front, depth = fwd, bwd, ffront, fdepth
        else:
            this, other, front, depth = bwd, fwd, bfront, bdepth
        new = []
        best = None
        for x in front:
            for step, y in neighbours(x):
                if y in this:
                    continue
                this[y] = (x, step, depth + 1)
                if y in other:
                    od = 0 if other[y] is None else other[y][2]
                    if best is None or od < best[0]:
                        best = (od, y)
                    if not bidirectional:
                        break
                new.append(y)
            if best is not None and not bidirectional:
                break
            if len(fwd) + len(bwd) > limits.max_states:
                return DistanceResult(UNKNOWN, reason=f"max_states {limits.max_states} reached")
        if forward:
            ffront, fdepth = new, depth + 1
        else:
            bfront, bdepth = new, depth + 1
        if best is not None:
            meet = best[1]
            moves = _forward_moves(fwd, meet) + _backward_moves(n, bwd, meet)
            return DistanceResult(EXACT, len(moves), Derivation(n, src, tuple(moves)))
    if exhausted_reason is not None:
        return DistanceResult(UNKNOWN, reason=exhausted_reason)
    return DistanceResult(NOT_EQUIVALENT)


def _check_pair(w: BraidWord, w2: BraidWord, positive: bool = True):
    if w.n != w2.n:
        raise DataError(f"strand counts differ: {w.n} vs {w2.n}")
    if positive and not (w.is_positive and w2.is_positive):
        raise PreconditionError("positive words required; use exact_distance_general")


def equivalent(w: BraidWord, w2: BraidWord, limits: SearchLimits | None = None) -> bool | Unknown:
    """Decide whether two positive words are related by relation moves."""
    _check_pair(w, w2)
    if len(w) != len(w2) or name_multiset(w) != name_multiset(w2):
        return False
    res = _search(w.n, w.letters, w2.letters, _relation_neighbours, limits or SearchLimits(),
                  bidirectional=False)
    if res.status == UNKNOWN:
        return Unknown(res.reason)
    return res.status == EXACT


def exact_distance(
    w: BraidWord,
    w2: BraidWord,
    limits: SearchLimits | None = None,
    bidirectional: bool = True,
) -> DistanceResult:
    _check_pair(w, w2)
    if len(w) != len(w2) or name_multiset(w) != name_multiset(w2):
        return DistanceResult(NOT_EQUIVALENT)
    return _search(w.n, w.letters, w2.letters, _relation_neighbours, limits or SearchLimits(),
                   bidirectional=bidirectional)


def exact_distance_general(
    w: BraidWord,
    w2: BraidWord,
    limits: SearchLimits,
    bidirectional: bool = True,
) -> DistanceResult:
    """Shortest path allowing free insertions and deletions.

    Intermediate words are capped at ``limits.max_word_length``, so a failed
    search only says Unknown. Words with different permutations or exponent
    sums are reported NotEquivalent without searching.
    """
    _check_pair(w, w2, positive=False)
    cap = limits.max_word_length
    if cap is None:
        raise PreconditionError("exact_distance_general needs limits.max_word_length")
    if cap < max(len(w), len(w2)):
        raise PreconditionError(f"max_word_length {cap} is shorter than an endpoint")
    if permutation_of(w) != permutation_of(w2) or exponent_sum(w) != exponent_sum(w2):
        return DistanceResult(NOT_EQUIVALENT)
    return _search(w.n, w.letters, w2.letters, _general_neighbours(w.n, cap), limits,
                   bidirectional=bidirectional,
                   exhausted_reason=f"no path within max_word_length {cap}")


# -- lower bound ------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class LowerBoundReport:
    multiset_equal: bool
    disjoint: int | None = None
    shared: int | None = None
    median: int | None = None
    bound_simple: int | None = None
    bound: int | None = None

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def lower_bound(w: BraidWord, w2: BraidWord) -> LowerBoundReport:
    """Count name pairs whose order differs between the two name sequences.

    ``disjoint`` pairs involve four strands, ``shared`` pairs three, and
    ``median`` is the subset of shared pairs whose common strand lies between
    the other two. A commutation flips one disjoint pair and a hexagon flips
    three shared pairs, exactly one of them median.
    """
    _check_pair(w, w2)
    s1 = name_sequence(w).entries
    s2 = name_sequence(w2).entries
    if len(s1) != len(s2) or set(s1) != set(s2):
        return LowerBoundReport(False)
    if not s1:
        return LowerBoundReport(True, 0, 0, 0, 0, 0)

    where = {e: k for k, e in enumerate(s2)}
    perm = np.array([where[e] for e in s1])
    p = np.array([e.p for e in s1])
    q = np.array([e.q for e in s1])

    upper = np.triu(np.ones((len(s1), len(s1)), dtype=bool), 1)
    inverted = upper & (perm[:, None] > perm[None, :])

    pp = p[:, None] == p[None, :]
    pq = p[:, None] == q[None, :]
    qp = q[:, None] == p[None, :]
    qq = q[:, None] == q[None, :]
    common = pp.astype(np.int8) + pq + qp + qq

    if np.any(inverted & (common == 2)):
        raise ConsistencyError("two crossings of the same strand pair changed order")

    shared = inverted & (common == 1)
    # common strand s, other strands oi and oj; median iff s lies between them
    s = np.where(pp | pq, p[:, None], q[:, None])
    oi = (p + q)[:, None] - s
    oj = (p + q)[None, :] - s
    median = shared & (np.minimum(oi, oj) < s) & (s < np.maximum(oi, oj))

    D = int(np.count_nonzero(inverted & (common == 0)))
    Sh = int(np.count_nonzero(shared))
    M = int(np.count_nonzero(median))
    return LowerBoundReport(True, D, Sh, M, D + M, D + max(M, math.ceil(Sh / 3)))


# -- random pairs -----------------------------------------------------------

def random_equivalent_pair(w: BraidWord, steps: int, seed: int) -> tuple[BraidWord, Derivation]:
    """Walk ``steps`` uniformly chosen relation moves from ``w``."""
    if steps < 0:
        raise PreconditionError("steps must be non-negative")
    rng = random.Random(seed)
    cur = w
    moves = []
    for _ in range(steps):
        options = applicable_moves(cur, relations_only=True)
        if not options:
            break
        m = rng.choice(options)
        cur = apply_move(cur, m)
        moves.append(m)
    return cur, Derivation(w.n, w.letters, tuple(moves))
