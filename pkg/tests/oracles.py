"""Brute-force reference implementations used to freeze expected values.

Nothing here imports the solvers or detectors under test: graphs are read
only through their edge list, and every answer comes from plain subset
enumeration over Python sets.
"""

from __future__ import annotations

import random
from itertools import combinations


def neighbours(n, edges):
    nb = {v: set() for v in range(n)}
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def _connected(nb, s):
    s = set(s)
    if not s:
        return False
    start = next(iter(s))
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in nb[v] & s:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == s


def dominating(nb, n, s):
    covered = set(s)
    for v in s:
        covered |= nb[v]
    return len(covered) == n


def cds(nb, n, s):
    return dominating(nb, n, s) and _connected(nb, s)


def naive_gamma(n, edges):
    nb = neighbours(n, edges)
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            if dominating(nb, n, s):
                return k


def naive_gamma_c(n, edges):
    nb = neighbours(n, edges)
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            if cds(nb, n, s):
                return k


def lex_least(n, edges, k, connected):
    nb = neighbours(n, edges)
    test = cds if connected else dominating
    for s in combinations(range(n), k):
        if test(nb, n, s):
            return list(s)


def is_connected(n, edges):
    return n > 0 and _connected(neighbours(n, edges), range(n))


def _induced_edges(nb, s):
    return sum(1 for u, v in combinations(s, 2) if v in nb[u])


def naive_has_path(n, edges, k, within=None):
    nb = neighbours(n, edges)
    pool = range(n) if within is None else sorted(within)
    for s in combinations(pool, k):
        degs = [len(nb[v] & set(s)) for v in s]
        if _induced_edges(nb, s) == k - 1 and max(degs, default=0) <= 2 and _connected(nb, s):
            return True
    return False


def naive_has_cycle(n, edges, k):
    nb = neighbours(n, edges)
    for s in combinations(range(n), k):
        if all(len(nb[v] & set(s)) == 2 for v in s) and _connected(nb, s):
            return True
    return False


def is_induced_path_order(n, edges, order):
    nb = neighbours(n, edges)
    k = len(order)
    if len(set(order)) != k:
        return False
    for i, j in combinations(range(k), 2):
        if (order[j] in nb[order[i]]) != (j == i + 1):
            return False
    return True


def is_induced_cycle_order(n, edges, order):
    nb = neighbours(n, edges)
    k = len(order)
    if len(set(order)) != k or k < 3:
        return False
    for i, j in combinations(range(k), 2):
        if (order[j] in nb[order[i]]) != (j == i + 1 or (i == 0 and j == k - 1)):
            return False
    return True


def inclusion_minimal_cds(n, edges, s):
    nb = neighbours(n, edges)
    s = list(s)
    if not cds(nb, n, s):
        return False
    return not any(cds(nb, n, t) for r in range(1, len(s)) for t in combinations(s, r))


def count_connected_labeled(n):
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    total = 0
    for mask in range(1 << len(pairs)):
        if is_connected(n, [p for b, p in enumerate(pairs) if mask >> b & 1]):
            total += 1
    return total


def random_connected(rng: random.Random, n_max: int = 12):
    """A connected graph on 1..n_max vertices: random spanning tree plus random extra edges."""
    n = rng.randint(1, n_max)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    p = rng.random() ** 2 * 0.5
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                edges.add((i, j))
    perm = list(range(n))
    rng.shuffle(perm)
    return n, sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges)
