"""Freeze the brute-force values that the other tests assert as literals.

Each literal below is recomputed here by the reference enumerators in
``oracles`` (plain subset search, no library solver involved), so a wrong
literal fails in this file rather than hiding behind an agreeing solver.
"""

import networkx as nx
import pytest

from conndom.families import gen_cycle, gen_F, gen_G, gen_H, gen_path, gen_pattern_H

from . import oracles as O

FROZEN = {
    # name: (graph, gamma, gamma_c)
    "P8": (gen_path(8), 3, 6),
    "C8": (gen_cycle(8), 3, 6),
    "P9": (gen_path(9), 3, 7),
    "C9": (gen_cycle(9), 3, 7),
    "Hpattern": (gen_pattern_H(), 3, 7),
    "F3": (gen_F(3), 4, 5),
    "H4": (gen_H(4), 4, 8),
    "G3": (gen_G(3), 4, 9),
    "G4": (gen_G(4), 5, 12),
    "P15": (gen_path(15), 5, 13),
    "C4": (gen_cycle(4), 2, 2),
    "H1": (gen_H(1), 1, 1),
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_values_match_brute_force(name):
    g, gm, gc = FROZEN[name]
    edges = g.edges()
    assert O.naive_gamma(g.n, edges) == gm
    assert O.naive_gamma_c(g.n, edges) == gc


def test_f3_lex_least_dominating_set():
    g = gen_F(3)
    assert O.lex_least(g.n, g.edges(), 4, False) == [1, 4, 7, 10]


def test_labeled_connected_counts():
    assert [O.count_connected_labeled(n) for n in range(1, 6)] == [1, 1, 4, 38, 728]


def test_graph6_literals_against_networkx():
    assert nx.to_graph6_bytes(nx.empty_graph(2), header=False).strip() == b"A?"
    assert nx.to_graph6_bytes(nx.complete_graph(2), header=False).strip() == b"A_"
    assert nx.to_graph6_bytes(nx.empty_graph(1), header=False).strip() == b"@"


def test_pattern_h_paths():
    g = gen_pattern_H()
    order = [3, 2, 1, 0, 4, 5, 6, 7]  # a4 a3 a2 a1 b1 b2 b3 b4
    assert O.is_induced_path_order(g.n, g.edges(), order)
    assert not O.naive_has_path(g.n, g.edges(), 9)
    assert not O.naive_has_cycle(g.n, g.edges(), 9)
    assert sorted(d for _, d in sorted(O.neighbours(g.n, g.edges()).items()) for d in [len(d)]) == [
        1, 1, 1, 2, 2, 2, 2, 3, 3, 3]


def test_family_class_memberships():
    for k in range(1, 4):
        g = gen_F(k)
        assert not O.naive_has_path(g.n, g.edges(), 6) and not O.naive_has_cycle(g.n, g.edges(), 6)
    g = gen_H(3)
    assert not O.naive_has_path(g.n, g.edges(), 7) and not O.naive_has_cycle(g.n, g.edges(), 7)
    g = gen_G(3)
    assert not O.naive_has_path(g.n, g.edges(), 9) and not O.naive_has_cycle(g.n, g.edges(), 9)
