"""Independent reference computations used to freeze expected values.

Nothing here calls into braidmetric's naming or search code: words are plain
tuples of signed ints and every quantity is recomputed the slow, obvious way.
"""

from collections import deque
from itertools import combinations


def crossing_names(letters, n):
    """(p, q, a, sign) per letter by replaying strand positions and link counts."""
    where = {s: s for s in range(1, n + 1)}  # strand name -> position
    link = {}
    out = []
    for x in letters:
        i = abs(x)
        u = next(s for s, pos in where.items() if pos == i)
        v = next(s for s, pos in where.items() if pos == i + 1)
        key = (min(u, v), max(u, v))
        before = link.get(key, 0)
        if x > 0:
            out.append((key[0], key[1], before + 1, 1))
            link[key] = before + 1
        else:
            out.append((key[0], key[1], before, -1))
            link[key] = before - 1
        where[u], where[v] = i + 1, i
    return out


def relation_neighbours(w):
    out = []
    for p in range(len(w) - 1):
        a, b = abs(w[p]), abs(w[p + 1])
        if abs(a - b) >= 2:
            out.append(w[:p] + (w[p + 1], w[p]) + w[p + 2:])
        if abs(a - b) == 1 and p + 2 < len(w) and w[p + 2] == w[p] and (w[p] > 0) == (w[p + 1] > 0):
            out.append(w[:p] + (w[p + 1], w[p], w[p + 1]) + w[p + 3:])
    return out


def bfs_distances(w):
    """Distances from ``w`` to every word of its positive relation class."""
    dist = {w: 0}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for y in relation_neighbours(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def classify(x, y):
    sx, sy = {x[0], x[1]}, {y[0], y[1]}
    common = sx & sy
    if len(common) == 2:
        return "same"
    if not common:
        return "disjoint"
    s = common.pop()
    others = sorted((sx | sy) - {s})
    return "median" if others[0] < s < others[1] else "shared"


def inversion_counts(letters1, letters2, n):
    """(D, Sh, M) by enumerating every pair of names of two positive words."""
    s1 = crossing_names(letters1, n)
    s2 = crossing_names(letters2, n)
    assert sorted(s1) == sorted(s2)
    pos2 = {e: k for k, e in enumerate(s2)}
    D = Sh = M = 0
    for i, j in combinations(range(len(s1)), 2):
        x, y = s1[i], s1[j]
        if pos2[x] < pos2[y]:
            continue
        c = classify(x, y)
        assert c != "same"
        if c == "disjoint":
            D += 1
        else:
            Sh += 1
            M += c == "median"
    return D, Sh, M
