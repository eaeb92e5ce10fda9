"""Compiled scans over every labeled graph on n vertices.

A labeled graph is an edge mask: bit ``b`` switches on the vertex pair
``PAIRS[n][b]`` (graph6 column order).  The kernels evaluate one check per
mask and return counters plus the masks of violating graphs.  They are an
independent second route to the pure-Python solvers in :mod:`conndom.solve`
and :mod:`conndom.detect`: domination numbers come from subset tables in
cardinality order and forbidden paths/cycles from subset enumeration, not
from branching or path extension.
"""

from __future__ import annotations

import numpy as np
from numba import njit

__all__ = [
    "pairs",
    "subsets_by_size",
    "scan_range",
    "values_range",
    "CHECK_CODES",
    "MAX_KERNEL_N",
    "random_cds_start",
]

MAX_KERNEL_N = 9

CHECK_CODES = {
    "observation1": 0,
    "zverovich": 1,
    "theorem2": 2,
    "theorem3": 3,
    "lemma1": 4,
    "conjecture1": 5,
}

MASK64 = (1 << 64) - 1


def pairs(n: int) -> np.ndarray:
    """Vertex pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ..."""
    out = [(i, j) for j in range(1, n) for i in range(j)]
    return np.array(out, dtype=np.int64).reshape(-1, 2)


def subsets_by_size(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All subsets of ``0..n-1`` ordered by (size, value) and the start offset of each size."""
    subs = sorted(range(1 << n), key=lambda s: (bin(s).count("1"), s))
    start = np.zeros(n + 2, dtype=np.int64)
    for s in subs:
        start[bin(s).count("1") + 1] += 1
    start = np.cumsum(start)
    return np.array(subs, dtype=np.int64), start


# --- deterministic randomness shared with the pure-Python path ------------------------


def graph_key(n: int, adj) -> int:
    key = n
    for a in adj:
        key = ((key * 0x100000001B3) ^ a) & MASK64
    return key


def splitmix_next(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def rng_seed(seed: int, key: int) -> int:
    _, z = splitmix_next((seed * 0x9E3779B97F4A7C15 ^ key) & MASK64)
    return z


def random_cds_start(n: int, adj, closed, state: int) -> tuple[int, int]:
    """Random connected dominating set grown from a random vertex.

    Returns ``(mask, new_state)``.  Mirrors the compiled ``_random_start``.
    """
    full = (1 << n) - 1
    state, r = splitmix_next(state)
    v = r % n
    s = 1 << v
    dom = closed[v]
    while dom != full:
        frontier = 0
        for u in range(n):
            if s >> u & 1:
                frontier |= adj[u]
        frontier &= ~s
        state, r = splitmix_next(state)
        pick = r % bin(frontier).count("1")
        for u in range(n):
            if frontier >> u & 1:
                if pick == 0:
                    s |= 1 << u
                    dom |= closed[u]
                    break
                pick -= 1
    for u in range(n):
        if not s >> u & 1 and adj[u] & s:
            state, r = splitmix_next(state)
            if r & 1:
                s |= 1 << u
    return s, state


# --- compiled primitives ---------------------------------------------------------------


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _connected(adj, s):
    if s == 0:
        return False
    seen = s & -s
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            v = _popcount(low - 1)
            nxt |= adj[v]
            f ^= low
        frontier = nxt & s & ~seen
        seen |= frontier
    return seen == s


@njit(cache=True)
def _dominated(closed, s):
    dom = 0
    while s:
        low = s & -s
        dom |= closed[_popcount(low - 1)]
        s ^= low
    return dom


@njit(cache=True)
def _is_cds(adj, closed, full, s):
    return _dominated(closed, s) == full and _connected(adj, s)


@njit(cache=True)
def _induced_shape(adj, s, k, cycle):
    """Does the k-subset ``s`` induce P_k (cycle=False) or C_k (cycle=True)?"""
    edges2 = 0
    t = s
    while t:
        low = t & -t
        d = _popcount(adj[_popcount(low - 1)] & s)
        if cycle:
            if d != 2:
                return False
        elif d > 2:
            return False
        edges2 += d
        t ^= low
    want = 2 * k if cycle else 2 * (k - 1)
    return edges2 == want and _connected(adj, s)


@njit(cache=True)
def _has_shape(adj, within, k, cycle, subs, starts):
    """Induced P_k / C_k inside ``G[within]``, by enumeration of k-subsets."""
    if k > _popcount(within):
        return False
    if cycle and k < 3:
        return False
    for idx in range(starts[k], starts[k + 1]):
        s = subs[idx]
        if s & ~within:
            continue
        if _induced_shape(adj, s, k, cycle):
            return True
    return False


@njit(cache=True)
def _gammas(adj, closed, full, subs, starts, n, want_c):
    """(gamma, gamma_c) by scanning subsets in cardinality order; gamma_c = -1 if not wanted."""
    g = -1
    idx = 1
    total = starts[n + 1]
    while idx < total:
        s = subs[idx]
        if _dominated(closed, s) == full:
            g = _popcount(s)
            break
        idx += 1
    if not want_c:
        return g, -1
    while idx < total:
        s = subs[idx]
        if _dominated(closed, s) == full and _connected(adj, s):
            return g, _popcount(s)
        idx += 1
    return g, -1


@njit(cache=True)
def _build(mask, n, pu, pv, adj, closed):
    for v in range(n):
        adj[v] = 0
    b = 0
    m = mask
    while m:
        if m & 1:
            adj[pu[b]] |= 1 << pv[b]
            adj[pv[b]] |= 1 << pu[b]
        m >>= 1
        b += 1
    for v in range(n):
        closed[v] = adj[v] | (1 << v)


@njit(cache=True)
def _mix_next(state):
    state = state + np.uint64(0x9E3779B97F4A7C15)
    z = state
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return state, z ^ (z >> np.uint64(31))


@njit(cache=True)
def _graph_key(n, adj):
    key = np.uint64(n)
    for v in range(n):
        key = (key * np.uint64(0x100000001B3)) ^ np.uint64(adj[v])
    return key


@njit(cache=True)
def _random_start(n, adj, closed, full, state):
    state, r = _mix_next(state)
    v = np.int64(r % np.uint64(n))
    s = np.int64(1) << v
    dom = closed[v]
    while dom != full:
        frontier = np.int64(0)
        for u in range(n):
            if (s >> u) & 1:
                frontier |= adj[u]
        frontier &= ~s
        state, r = _mix_next(state)
        pick = np.int64(r % np.uint64(_popcount(frontier)))
        for u in range(n):
            if (frontier >> u) & 1:
                if pick == 0:
                    s |= np.int64(1) << u
                    dom |= closed[u]
                    break
                pick -= 1
    for u in range(n):
        if not (s >> u) & 1 and adj[u] & s:
            state, r = _mix_next(state)
            if r & np.uint64(1):
                s |= np.int64(1) << u
    return s, state


@njit(cache=True)
def _minimalize(adj, closed, full, s):
    again = True
    while again:
        again = False
        t = s
        while t:
            low = t & -t
            cand = s & ~low
            if cand and _is_cds(adj, closed, full, cand):
                s = cand
                again = True
                break
            t ^= low
    return s


@njit(cache=True)
def scan_range(check, n, lo, hi, pu, pv, subs, starts, ks, n_starts, seed, max_record):
    """Evaluate one check on every edge mask in ``[lo, hi)``.

    Returns ``(counts, records, n_records)`` where counts = [connected,
    disconnected, members, violations] and records rows are
    (mask, gamma, gamma_c, aux).
    Lemma-1 rows carry k in ``aux`` and the offending minimal CDS in the
    gamma_c column; all other checks use aux for the bound.
    """
    adj = np.zeros(max(n, 1), dtype=np.int64)
    closed = np.zeros(max(n, 1), dtype=np.int64)
    full = (np.int64(1) << n) - 1
    counts = np.zeros(4, dtype=np.int64)
    records = np.zeros((max_record, 4), dtype=np.int64)
    nrec = 0
    members_k = np.zeros(len(ks), dtype=np.bool_)
    seen_x = np.zeros(n_starts + 1, dtype=np.int64)
    for mask in range(lo, hi):
        _build(mask, n, pu, pv, adj, closed)
        if not _connected(adj, full):
            counts[1] += 1
            continue
        counts[0] += 1
        if check == 4:
            any_member = False
            for i in range(len(ks)):
                k = ks[i]
                members_k[i] = not (_has_shape(adj, full, k, False, subs, starts)
                                    or _has_shape(adj, full, k, True, subs, starts))
                any_member |= members_k[i]
            if not any_member:
                continue
            counts[2] += 1
            nx = 0
            seen_x[nx] = _minimalize(adj, closed, full, full)
            nx += 1
            key = _graph_key(n, adj)
            state, z = _mix_next((np.uint64(seed) * np.uint64(0x9E3779B97F4A7C15)) ^ key)
            state = z
            for _r in range(n_starts):
                start, state = _random_start(n, adj, closed, full, state)
                x = _minimalize(adj, closed, full, start)
                dup = False
                for j in range(nx):
                    if seen_x[j] == x:
                        dup = True
                        break
                if not dup:
                    seen_x[nx] = x
                    nx += 1
            for i in range(len(ks)):
                if not members_k[i]:
                    continue
                k = ks[i]
                for j in range(nx):
                    if _has_shape(adj, seen_x[j], k - 2, False, subs, starts):
                        counts[3] += 1
                        if nrec < max_record:
                            records[nrec, 0] = mask
                            records[nrec, 1] = -1
                            records[nrec, 2] = seen_x[j]
                            records[nrec, 3] = k
                            nrec += 1
            continue
        if check == 1:
            if _has_shape(adj, full, 5, False, subs, starts) or _has_shape(adj, full, 5, True, subs, starts):
                continue
        elif check == 2:
            if _has_shape(adj, full, 6, False, subs, starts) or _has_shape(adj, full, 6, True, subs, starts):
                continue
        elif check == 3:
            if _has_shape(adj, full, 8, False, subs, starts) or _has_shape(adj, full, 8, True, subs, starts):
                continue
        elif check == 5:
            # the pattern H has 10 vertices and cannot occur for n <= 9
            if _has_shape(adj, full, 9, False, subs, starts) or _has_shape(adj, full, 9, True, subs, starts):
                continue
        counts[2] += 1
        g, gc = _gammas(adj, closed, full, subs, starts, n, True)
        if check == 0:
            bound = 3 * g - 2
            bad = gc > bound
        elif check == 1:
            bound = g
            bad = gc != g
        elif check == 2:
            bound = g + 1
            bad = gc > bound
        else:
            bound = 2 * g
            bad = gc > bound
        if bad:
            counts[3] += 1
            if nrec < max_record:
                records[nrec, 0] = mask
                records[nrec, 1] = g
                records[nrec, 2] = gc
                records[nrec, 3] = bound
                nrec += 1
    return counts, records, nrec


@njit(cache=True)
def values_range(n, lo, hi, pu, pv, subs, starts):
    """(mask, gamma, gamma_c, P5free, C5free, P6free, C6free) rows for connected masks in ``[lo, hi)``."""
    out = np.zeros((hi - lo, 7), dtype=np.int64)
    adj = np.zeros(max(n, 1), dtype=np.int64)
    closed = np.zeros(max(n, 1), dtype=np.int64)
    full = (np.int64(1) << n) - 1
    row = 0
    for mask in range(lo, hi):
        _build(mask, n, pu, pv, adj, closed)
        if not _connected(adj, full):
            continue
        g, gc = _gammas(adj, closed, full, subs, starts, n, True)
        out[row, 0] = mask
        out[row, 1] = g
        out[row, 2] = gc
        out[row, 3] = not _has_shape(adj, full, 5, False, subs, starts)
        out[row, 4] = not _has_shape(adj, full, 5, True, subs, starts)
        out[row, 5] = not _has_shape(adj, full, 6, False, subs, starts)
        out[row, 6] = not _has_shape(adj, full, 6, True, subs, starts)
        row += 1
    return out[:row]


@njit(cache=True)
def minimal_cds_family(n, adj_in, n_starts, seed):
    """Distinct minimal CDSs reached from the full set and ``n_starts`` random starts."""
    adj = adj_in.copy()
    closed = np.zeros(n, dtype=np.int64)
    for v in range(n):
        closed[v] = adj[v] | (np.int64(1) << v)
    full = (np.int64(1) << n) - 1
    seen_x = np.zeros(n_starts + 1, dtype=np.int64)
    nx = 0
    seen_x[nx] = _minimalize(adj, closed, full, full)
    nx += 1
    key = _graph_key(n, adj)
    state, z = _mix_next((np.uint64(seed) * np.uint64(0x9E3779B97F4A7C15)) ^ key)
    state = z
    for _r in range(n_starts):
        start, state = _random_start(n, adj, closed, full, state)
        x = _minimalize(adj, closed, full, start)
        dup = False
        for j in range(nx):
            if seen_x[j] == x:
                dup = True
                break
        if not dup:
            seen_x[nx] = x
            nx += 1
    return seen_x[:nx]
