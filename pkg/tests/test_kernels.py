"""The compiled scans must agree with the pure-Python solvers graph by graph."""

import random

import numpy as np
import pytest

from conndom import kernels
from conndom.detect import find_induced_cycle, find_induced_path
from conndom.graph import Graph
from conndom.harness import graph_from_edge_mask, minimal_cds_family
from conndom.solve import gamma_c_value, gamma_value

from . import oracles as O


def _tables(n):
    p = kernels.pairs(n)
    subs, starts = kernels.subsets_by_size(n)
    return p[:, 0].copy(), p[:, 1].copy(), subs, starts


def test_pairs_follow_graph6_column_order():
    assert kernels.pairs(4).tolist() == [[0, 1], [0, 2], [1, 2], [0, 3], [1, 3], [2, 3]]


def test_subsets_by_size():
    subs, starts = kernels.subsets_by_size(3)
    assert subs.tolist() == [0, 1, 2, 4, 3, 5, 6, 7]
    assert starts.tolist() == [0, 1, 4, 7, 8]


@pytest.mark.parametrize("n,stride", [(4, 1), (5, 1), (6, 7)])
def test_values_match_python(n, stride):
    pu, pv, subs, starts = _tables(n)
    rows = kernels.values_range(n, 0, 1 << (n * (n - 1) // 2), pu, pv, subs, starts)
    assert len(rows) == {4: 38, 5: 728, 6: 26704}[n]
    for mask, gm, gc, p5, c5, p6, c6 in rows[::stride].tolist():
        g = graph_from_edge_mask(n, mask)
        assert g.is_connected()
        assert (gm, gc) == (gamma_value(g), gamma_c_value(g))
        assert bool(p5) == (find_induced_path(g, 5) is None)
        assert bool(c5) == (find_induced_cycle(g, 5) is None)
        assert bool(p6) == (find_induced_path(g, 6) is None)
        assert bool(c6) == (find_induced_cycle(g, 6) is None)


def test_random_start_mirror():
    rng = random.Random(9)
    for _ in range(40):
        n, e = O.random_connected(rng, 9)
        g = Graph(n, e)
        for seed in (0, 1, 12345):
            py = minimal_cds_family(g, starts=30, seed=seed)
            jit = kernels.minimal_cds_family(n, np.array(g.adj, dtype=np.int64), 30, seed).tolist()
            assert py == jit


def test_random_start_is_connected_dominating():
    rng = random.Random(4)
    for _ in range(30):
        n, e = O.random_connected(rng, 9)
        g = Graph(n, e)
        nb = O.neighbours(n, e)
        state = kernels.rng_seed(0, kernels.graph_key(n, g.adj))
        for _ in range(10):
            s, state = kernels.random_cds_start(n, g.adj, g.closed, state)
            assert O.cds(nb, n, [v for v in range(n) if s >> v & 1])


def test_minimal_family_members_are_inclusion_minimal():
    rng = random.Random(8)
    for _ in range(20):
        n, e = O.random_connected(rng, 8)
        g = Graph(n, e)
        for x in minimal_cds_family(g, starts=20, seed=3):
            assert O.inclusion_minimal_cds(n, e, [v for v in range(n) if x >> v & 1])


def test_scan_counts_small():
    for n in range(1, 6):
        pu, pv, subs, starts = _tables(n)
        counts, _, nrec = kernels.scan_range(
            0, n, 0, 1 << (n * (n - 1) // 2), pu, pv, subs, starts,
            np.array([6], dtype=np.int64), 5, 0, 10)
        assert counts[0] == O.count_connected_labeled(n)
        assert counts[0] + counts[1] == 1 << (n * (n - 1) // 2)
        assert counts[3] == nrec == 0
