"""Property tests over random small graphs."""

from hypothesis import given, settings
from hypothesis import strategies as st

from conndom.detect import find_induced_cycle, find_induced_path, verify_witness
from conndom.graph import Graph, VertexSet, complement, components, parse_graph6, write_graph6
from conndom.solve import gamma, gamma_c, is_cds, is_dominating, minimalize_cds

from . import oracles as O


@st.composite
def graphs(draw, max_n=9, connected=False):
    n = draw(st.integers(1 if connected else 0, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, c in zip(pairs, chosen) if c]
    if connected:
        edges += [(v - 1, v) for v in range(1, n) if (v - 1, v) not in edges]
    return Graph(n, edges)


@given(graphs(max_n=20))
def test_graph6_round_trip(g):
    assert parse_graph6(write_graph6(g)) == g


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).num_edges() == g.n * (g.n - 1) // 2 - g.num_edges()


@given(graphs(), st.integers(0, 2**9 - 1))
def test_components_partition(g, mask):
    s = VertexSet(g.n, mask & ((1 << g.n) - 1))
    parts = components(g, s)
    union = VertexSet(g.n)
    for i, p in enumerate(parts):
        assert p and p <= s
        union = union | p
        for q in parts[i + 1:]:
            assert not (p & q)
            assert not any(g.has_edge(u, v) for u in p for v in q)
    assert union == s
    assert [min(p) for p in parts] == sorted(min(p) for p in parts)


@settings(max_examples=150)
@given(graphs(max_n=8, connected=True))
def test_certificates_are_optimal(g):
    a, b = gamma(g), gamma_c(g)
    assert is_dominating(g, a.witness) and len(a.witness) == a.value
    assert is_cds(g, b.witness) and len(b.witness) == b.value
    assert a.value == O.naive_gamma(g.n, g.edges())
    assert b.value == O.naive_gamma_c(g.n, g.edges())
    assert a.value <= b.value <= max(1, 3 * a.value - 2)


@settings(max_examples=150)
@given(graphs(max_n=8), st.integers(1, 8))
def test_witnesses_verify(g, k):
    w = find_induced_path(g, k)
    assert (w is not None) == O.naive_has_path(g.n, g.edges(), k)
    if w is not None:
        assert verify_witness(g, w)
    if k >= 3:
        w = find_induced_cycle(g, k)
        assert (w is not None) == O.naive_has_cycle(g.n, g.edges(), k)
        if w is not None:
            assert verify_witness(g, w)


@settings(max_examples=100)
@given(graphs(max_n=8, connected=True))
def test_minimalize_reaches_minimal(g):
    m = minimalize_cds(g, g.vertices())
    assert O.inclusion_minimal_cds(g.n, g.edges(), m.sorted())
    assert minimalize_cds(g, m) == m
