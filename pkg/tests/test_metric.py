import random

import pytest

from braidmetric import (
    BraidWord,
    Move,
    SearchLimits,
    Unknown,
    applicable_moves,
    apply_move,
    equivalent,
    exact_distance,
    exact_distance_general,
    family_word,
    lower_bound,
    random_equivalent_pair,
    validate_derivation,
)
from braidmetric.errors import DataError, PreconditionError
from braidmetric.metric import ENV_MAX_STATES, EXACT, NOT_EQUIVALENT, UNKNOWN

from conftest import W
from oracles import bfs_distances, inversion_counts


def random_positive(rng, n, length):
    return BraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(length)))


def test_equivalent_examples():
    assert equivalent(W("1 2 1", 3), W("2 1 2", 3)) is True
    assert equivalent(W("1 2", 3), W("2 1", 3)) is False
    assert equivalent(W("1 3", 4), W("3 1", 4)) is True


def test_equivalent_class_exhausted():
    # equal name multisets, but 1 1 2 2 admits no relation move at all
    a, b = W("1 1 2 2", 3), W("2 2 1 1", 3)
    assert lower_bound(a, b).multiset_equal
    assert equivalent(a, b) is False
    assert exact_distance(a, b).status == NOT_EQUIVALENT


def test_strand_mismatch():
    with pytest.raises(DataError):
        exact_distance(W("1", 3), W("1", 4))


def test_positive_required():
    with pytest.raises(PreconditionError):
        exact_distance(W("1 -1", 2), W("", 2))


@pytest.mark.parametrize("m, expected", [(1, 4), (2, 16)])
def test_prop1_distance(m, expected):
    a, b = family_word("prop1_left", m), family_word("prop1_right", m)
    res = exact_distance(a, b)
    assert res.status == EXACT and res.distance == expected
    words = validate_derivation(res.witness)
    assert words[-1] == b and len(res.witness) == expected


def test_trivial_distances():
    w = W("1 2 1 3", 4)
    res = exact_distance(w, w)
    assert (res.status, res.distance, len(res.witness)) == (EXACT, 0, 0)
    assert exact_distance(W("1 2", 3), W("2 1", 3)).status == NOT_EQUIVALENT


def test_general_examples():
    lim = SearchLimits(max_word_length=4)
    assert exact_distance_general(W("1 -1", 2), W("", 2), lim).distance == 1
    res = exact_distance_general(W("", 2), W("1 -1", 2), lim)
    assert res.distance == 1
    assert validate_derivation(res.witness)[-1] == W("1 -1", 2)
    assert exact_distance_general(W("1", 3), W("2", 3), lim).status == NOT_EQUIVALENT


def test_general_needs_cap():
    with pytest.raises(PreconditionError):
        exact_distance_general(W("1", 2), W("1", 2), SearchLimits())


def test_general_free_reduction_detour():
    # 1 2 -1 equals -2 1 2; a shortest path must pass through longer words
    lim = SearchLimits(max_word_length=5)
    res = exact_distance_general(W("1 2 -1", 3), W("-2 1 2", 3), lim)
    assert res.status == EXACT
    assert validate_derivation(res.witness)[-1] == W("-2 1 2", 3)
    single = exact_distance_general(W("1 2 -1", 3), W("-2 1 2", 3), lim, bidirectional=False)
    assert single.distance == res.distance


def test_general_cap_makes_unknown():
    lim = SearchLimits(max_word_length=3)
    res = exact_distance_general(W("1 2 -1", 3), W("-2 1 2", 3), lim)
    assert res.status == UNKNOWN


def test_limits():
    a, b = family_word("prop1_left", 2), family_word("prop1_right", 2)
    assert exact_distance(a, b, SearchLimits(max_states=20)).status == UNKNOWN
    assert exact_distance(a, b, SearchLimits(max_depth=15)).status == UNKNOWN
    assert exact_distance(a, b, SearchLimits(max_depth=16)).distance == 16
    assert isinstance(equivalent(a, b, SearchLimits(max_states=5)), Unknown)


def test_limits_from_env(monkeypatch):
    monkeypatch.setenv(ENV_MAX_STATES, "123")
    assert SearchLimits.from_env().max_states == 123
    assert SearchLimits.from_env(max_states=7).max_states == 7
    monkeypatch.setenv(ENV_MAX_STATES, "lots")
    with pytest.raises(DataError):
        SearchLimits.from_env()


def test_search_matches_oracle_bfs():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.choice([3, 4, 5])
        w = random_positive(rng, n, rng.randint(0, 9))
        dist = bfs_distances(w.letters)
        targets = sorted(dist)
        for t in rng.sample(targets, min(4, len(targets))):
            target = BraidWord(n, t)
            bi = exact_distance(w, target)
            single = exact_distance(w, target, bidirectional=False)
            assert bi.distance == single.distance == dist[t]
            assert validate_derivation(bi.witness)[-1] == target
            assert validate_derivation(single.witness)[-1] == target


def test_symmetry_and_triangle():
    rng = random.Random(11)
    for _ in range(15):
        w = random_positive(rng, 4, 8)
        cls = sorted(bfs_distances(w.letters))
        a, b, c = (BraidWord(4, rng.choice(cls)) for _ in range(3))
        ab = exact_distance(a, b).distance
        assert ab == exact_distance(b, a).distance
        assert exact_distance(a, c).distance <= ab + exact_distance(b, c).distance


def test_one_move_has_distance_one():
    rng = random.Random(3)
    for _ in range(30):
        w = random_positive(rng, 5, 7)
        for m in applicable_moves(w, relations_only=True):
            assert exact_distance(w, apply_move(w, m)).distance == 1


def test_witness_is_deterministic():
    a, b = family_word("prop1_left", 2), family_word("lcm_right", 2)
    assert exact_distance(a, b).witness == exact_distance(a, b).witness


# -- lower bound --

def test_lower_bound_prop1_m1():
    r = lower_bound(family_word("prop1_left", 1), family_word("prop1_right", 1))
    assert (r.disjoint, r.median, r.shared, r.bound) == (0, 4, 8, 4)


def test_lower_bound_prop1_m2():
    # D = 0, Sh = 32 frozen from the pair enumeration oracle
    r = lower_bound(family_word("prop1_left", 2), family_word("prop1_right", 2))
    assert (r.disjoint, r.median, r.shared, r.bound) == (0, 16, 32, 16)


def test_lower_bound_lcm_m1():
    assert lower_bound(family_word("prop1_left", 1), family_word("lcm_right", 1)).bound == 4


def test_lower_bound_identical():
    r = lower_bound(W("1 2 1 3", 4), W("1 2 1 3", 4))
    assert r.to_dict() == {"multiset_equal": True, "disjoint": 0, "shared": 0, "median": 0,
                           "bound_simple": 0, "bound": 0}
    assert lower_bound(W("", 3), W("", 3)).bound == 0


def test_lower_bound_multisets_differ():
    r = lower_bound(W("1 2", 3), W("2 1", 3))
    assert not r.multiset_equal and r.bound is None


def test_lower_bound_matches_oracle():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.choice([3, 4, 5, 6])
        w = random_positive(rng, n, rng.randint(1, 12))
        w2, _ = random_equivalent_pair(w, rng.randint(0, 30), rng.randint(0, 10**6))
        r = lower_bound(w, w2)
        assert (r.disjoint, r.shared, r.median) == inversion_counts(w.letters, w2.letters, n)


def test_lower_bound_below_distance():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.choice([3, 4, 5])
        w = random_positive(rng, n, rng.randint(1, 10))
        w2, _ = random_equivalent_pair(w, 12, rng.randint(0, 10**6))
        k = exact_distance(w, w2).distance
        r = lower_bound(w, w2)
        assert r.bound <= k and r.bound_simple <= k


# -- random pairs --

def test_random_pair_examples():
    w = family_word("prop1_left", 2)
    w2, d = random_equivalent_pair(w, 0, 1)
    assert w2 == w and len(d) == 0
    w2, d = random_equivalent_pair(W("1 2 1", 3), 1, 1)
    assert w2 == W("2 1 2", 3) and d.moves == (Move("hexagon", 1),)
    w2, d = random_equivalent_pair(w, 10, 42)
    assert exact_distance(w, w2).distance <= 10
    assert validate_derivation(d)[-1] == w2


def test_random_pair_stuck_and_reproducible():
    w2, d = random_equivalent_pair(W("1 1", 3), 5, 0)
    assert w2 == W("1 1", 3) and len(d) == 0
    w = W("1 2 1 3 2 1", 4)
    assert random_equivalent_pair(w, 20, 99) == random_equivalent_pair(w, 20, 99)
