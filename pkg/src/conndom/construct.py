"""Constructive pipelines turning a minimum dominating set into a small CDS.

``theorem2_pipeline`` targets connected (P6, C6)-free graphs (bound gamma + 1),
``theorem3_pipeline`` connected (P8, C8)-free graphs (bound 2 gamma).  Both
share the scaffolding: a minimum dominating set D, its components D_i, a
minimal connector C, a minimal CDS X inside D ∪ C, the index set I of
components missed by X, one pick x_i per missed component, and the set S.
Every structural fact the argument relies on is re-checked on the concrete
input; a failure raises :class:`DefectError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .detect import ClassSpec, find_induced_path, has_induced_path, is_member
from .errors import ClassViolation, ContractViolation, DefectError
from .graph import (
    Graph,
    VertexSet,
    _own,
    bits,
    complement,
    component_masks,
    connected_mask,
)
from .solve import cds_mask, dominated_by, gamma, gamma_value, minimalize_cds_mask, minimalize_connector_mask

__all__ = [
    "ConstructionTrace",
    "StructuredCDS",
    "build_connector",
    "seinsche_split",
    "find_structured_cds",
    "shrink_c6",
    "theorem2_pipeline",
    "theorem3_pipeline",
]


def _mask(s: VertexSet | int) -> int:
    return s.mask if isinstance(s, VertexSet) else s


def _lift(order: list[int], local: int) -> int:
    out = 0
    for i in bits(local):
        out |= 1 << order[i]
    return out


def _sorted(mask: int) -> list[int]:
    return list(bits(mask))


# --- connector ------------------------------------------------------------------


def _shortest_link(adj: tuple[int, ...], comps: list[int], taken: int):
    """Shortest path through vertices outside ``taken`` joining two components.

    Returns ``(interior_mask, i, j)`` for the lexicographically first
    (length, i, j) pair.
    """
    best = None
    for i, ci in enumerate(comps):
        # BFS layers through outside vertices; parents point to the smallest predecessor
        parent: dict[int, int] = {}
        layer_src = ci
        seen = taken
        layers: list[int] = []
        depth = 0
        while True:
            # components adjacent to the current frontier (or to ci itself at depth 0)
            reach = 0
            for v in bits(layer_src):
                reach |= adj[v]
            for j, cj in enumerate(comps):
                if j == i or not reach & cj:
                    continue
                if best is not None and (depth, i, j) >= best[0]:
                    continue
                # endpoint: smallest frontier vertex adjacent to cj
                end = next(v for v in bits(layer_src) if adj[v] & cj)
                interior = 0
                v = end
                for _ in range(depth):
                    interior |= 1 << v
                    v = parent.get(v, -1)
                best = ((depth, i, j), interior)
            if best is not None and best[0][0] <= depth:
                break
            nxt = reach & ~seen
            if not nxt:
                break
            for w in bits(nxt):
                parent[w] = next(v for v in bits(layer_src) if adj[v] >> w & 1)
            seen |= nxt
            layers.append(nxt)
            layer_src = nxt
            depth += 1
    if best is None:
        raise ContractViolation("components cannot be joined: graph is disconnected")
    (_, i, j), interior = best
    return interior, i, j


def build_connector_mask(g: Graph, d: int) -> int:
    adj = g.adj
    c = 0
    while True:
        comps = component_masks(adj, d | c)
        if len(comps) <= 1:
            break
        interior, _, _ = _shortest_link(adj, comps, d | c)
        c |= interior
    return minimalize_connector_mask(g, d, c)


def build_connector(g: Graph, d: VertexSet) -> VertexSet:
    """Inclusion-minimal C with ``G[D ∪ C]`` connected, grown by shortest joining paths."""
    _own(g, d)
    if not d:
        raise ContractViolation("dominating set must be nonempty")
    if not g.is_connected():
        raise ContractViolation("graph must be connected")
    return VertexSet(g.n, build_connector_mask(g, d.mask))


# --- structural subroutines ---------------------------------------------------------


def seinsche_split(h: Graph) -> tuple[str, list[VertexSet]]:
    """Split a P4-free graph into components, or into co-components if it is connected."""
    if h.n < 2:
        raise ContractViolation("Seinsche split needs at least two vertices")
    w = find_induced_path(h, 4)
    if w is not None:
        raise ClassViolation(f"graph contains an induced P4 {list(w.vertices)}", w)
    parts = component_masks(h.adj, h.full_mask)
    side = "components"
    if len(parts) == 1:
        parts = component_masks(complement(h).adj, h.full_mask)
        side = "co_components"
        if len(parts) < 2:
            raise DefectError("P4-free graph with connected complement")
    return side, [VertexSet(h.n, p) for p in parts]


def _co_components(adj: tuple[int, ...], mask: int) -> list[int]:
    """Components of the complement of ``G[mask]``."""
    co = [0] * len(adj)
    for v in bits(mask):
        co[v] = mask & ~adj[v] & ~(1 << v)
    return component_masks(tuple(co), mask)


def _is_c6(adj: tuple[int, ...], mask: int) -> bool:
    return (
        mask.bit_count() == 6
        and all((adj[v] & mask).bit_count() == 2 for v in bits(mask))
        and connected_mask(adj, mask)
    )


def _cycle_order(adj: tuple[int, ...], mask: int) -> list[int]:
    """Consecutive ordering of an induced cycle: start at its minimum, step to the smaller neighbour."""
    start = (mask & -mask).bit_length() - 1
    order = [start]
    prev, cur = -1, start
    while True:
        nbrs = [u for u in bits(adj[cur] & mask) if u != prev]
        nxt = nbrs[0]
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > mask.bit_count():
            raise DefectError("not a cycle")
    return order


@dataclass(frozen=True)
class StructuredCDS:
    Y: VertexSet
    kind: str  # "c6" | "complete_bipartite"
    bipartition: tuple[VertexSet, VertexSet] | None
    order: tuple[int, ...] = ()  # consecutive ordering when kind == "c6"


def _structured_mask(h: Graph):
    n, adj, closed, full = h.n, h.adj, h.closed, h.full_mask
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            y = 0
            for v in combo:
                y |= 1 << v
            if dominated_by(closed, y) != full or not connected_mask(adj, y):
                continue
            if size == 1:
                return y, "complete_bipartite", (y, 0)
            if _is_c6(adj, y):
                return y, "c6", None
            co = _co_components(adj, y)
            if len(co) >= 2:
                return y, "complete_bipartite", (co[0], y & ~co[0])
    return None


def find_structured_cds(h: Graph) -> StructuredCDS:
    """Smallest CDS Y of a connected P6-free graph with G[Y] ≅ C6 or G[Y] spanning-complete-bipartite.

    Among minimum-size candidates the lexicographically first is returned.
    For the bipartite kind, A is the co-component of G[Y] holding its
    smallest vertex and B the rest (B is empty only when |Y| = 1).
    """
    if h.n < 1 or not h.is_connected():
        raise ContractViolation("structured CDS needs a connected graph")
    w = find_induced_path(h, 6)
    if w is not None:
        raise ClassViolation(f"graph contains an induced P6 {list(w.vertices)}", w)
    found = _structured_mask(h)
    if found is None:
        raise DefectError("no structured connected dominating set in a connected P6-free graph")
    y, kind, bip = found
    if kind == "c6":
        return StructuredCDS(VertexSet(h.n, y), kind, None, tuple(_cycle_order(h.adj, y)))
    a, b = bip
    return StructuredCDS(VertexSet(h.n, y), kind, (VertexSet(h.n, a), VertexSet(h.n, b)))


def shrink_c6(h: Graph, order) -> VertexSet:
    """Return the first four vertices of an induced C6 listed consecutively; checked to dominate ``h``."""
    order = list(order)
    if len(order) != 6 or len(set(order)) != 6:
        raise ContractViolation("need six distinct vertices u1..u6")
    for i in range(6):
        for j in range(i + 1, 6):
            want = (j - i) in (1, 5)
            if h.has_edge(order[i], order[j]) != want:
                raise ContractViolation(f"{order} is not a consecutive induced C6")
    if not h.is_connected():
        raise ContractViolation("host must be connected")
    w = find_induced_path(h, 6)
    if w is not None:
        raise ClassViolation(f"host contains an induced P6 {list(w.vertices)}", w)
    y = 0
    for v in order[:4]:
        y |= 1 << v
    if not cds_mask(h, y):
        raise DefectError(f"{order[:4]} does not dominate the P6-free host")
    return VertexSet(h.n, y)


# --- pipelines ----------------------------------------------------------------------


@dataclass
class ConstructionTrace:
    theorem: str
    D: VertexSet
    D_components: list[VertexSet]
    C: VertexSet
    X: VertexSet
    I: list[int]
    picks: dict[int, int]
    S: VertexSet
    bound: int
    final: VertexSet
    satisfied: bool
    d_is_minimum: bool = True
    branch: str = ""  # theorem 2: "s_connected" | "universal_vertex"
    y: int | None = None  # theorem 2 universal vertex
    structure: str = "none"
    Y: VertexSet | None = None
    Y_order: tuple[int, ...] = ()
    Y_prime: VertexSet | None = None
    A: VertexSet | None = None
    B: VertexSet | None = None
    y_picks: dict[int, int] = field(default_factory=dict)
    z: int | None = None
    l: int | None = None
    assembled: VertexSet | None = None
    notes: list[str] = field(default_factory=list)

    def recompute_S(self) -> VertexSet:
        x = self.X.mask
        s = 0
        for i, di in enumerate(self.D_components):
            if i not in self.I:
                s |= di.mask & x
        for j in self.I:
            s |= 1 << self.picks[j]
        return VertexSet(self.X.capacity, s)

    def to_dict(self) -> dict:
        def vs(v):
            return None if v is None else v.sorted()

        return {
            "theorem": self.theorem,
            "D": vs(self.D),
            "D_components": [c.sorted() for c in self.D_components],
            "C": vs(self.C),
            "X": vs(self.X),
            "I": list(self.I),
            "picks": {str(k): v for k, v in sorted(self.picks.items())},
            "S": vs(self.S),
            "branch": self.branch,
            "y": self.y,
            "structure": self.structure,
            "Y": vs(self.Y),
            "Y_order": list(self.Y_order),
            "Y_prime": vs(self.Y_prime),
            "A": vs(self.A),
            "B": vs(self.B),
            "y_picks": {str(k): v for k, v in sorted(self.y_picks.items())},
            "z": self.z,
            "l": self.l,
            "assembled": vs(self.assembled),
            "final": vs(self.final),
            "bound": self.bound,
            "satisfied": self.satisfied,
            "d_is_minimum": self.d_is_minimum,
            "notes": list(self.notes),
        }


def _check_input(g: Graph, spec: ClassSpec, d: VertexSet | None, checked: bool) -> tuple[int, bool]:
    if g.n < 1 or not g.is_connected():
        raise ContractViolation("pipeline input must be a connected graph")
    if not checked:
        ok, w = is_member(g, spec)
        if not ok:
            raise ClassViolation(f"graph is not ({spec})-free: induced {w.name} on {list(w.vertices)}", w)
    if d is None:
        return gamma(g).witness.mask, True
    _own(g, d)
    if dominated_by(g.closed, d.mask) != g.full_mask:
        raise ContractViolation(f"{d.sorted()} is not a dominating set")
    return d.mask, len(d) == gamma_value(g)


def _scaffold(g: Graph, d: int):
    """D components, connector C, minimal CDS X, missed indices I, picks x_i and S."""
    adj = g.adj
    comps = component_masks(adj, d)
    c = build_connector_mask(g, d)
    x = minimalize_cds_mask(g, d | c)
    missed = [i for i, di in enumerate(comps) if not di & x]
    picks = {}
    s = 0
    for i, di in enumerate(comps):
        if i not in missed:
            s |= di & x
    for i in missed:
        cand = 0
        for v in bits(comps[i]):
            cand |= adj[v]
        cand &= x
        if not cand:
            raise DefectError(f"no vertex of X dominates component {i}")
        picks[i] = (cand & -cand).bit_length() - 1
        s |= 1 << picks[i]
    return comps, c, x, missed, picks, s


def theorem2_pipeline(g: Graph, d: VertexSet | None = None, *, checked: bool = False) -> ConstructionTrace:
    """Connected dominating set of size at most gamma + 1 in a connected (P6, C6)-free graph.

    ``d`` overrides the minimum dominating set; when it is not minimum the
    bound is recorded against ``|d|`` but not enforced.  ``checked=True``
    skips the class-membership test for callers that already ran it.
    """
    d_mask, d_min = _check_input(g, ClassSpec((6,), (6,)), d, checked)
    n, adj = g.n, g.adj
    comps, c, x, missed, picks, s = _scaffold(g, d_mask)
    if has_induced_path(adj, 4, x):
        raise DefectError(f"G[X] contains an induced P4 (X = {_sorted(x)})")
    trace = ConstructionTrace(
        theorem="p6c6",
        D=VertexSet(n, d_mask),
        D_components=[VertexSet(n, m) for m in comps],
        C=VertexSet(n, c),
        X=VertexSet(n, x),
        I=missed,
        picks=picks,
        S=VertexSet(n, s),
        bound=d_mask.bit_count() + 1,
        final=VertexSet(n, x),
        satisfied=False,
        d_is_minimum=d_min,
    )
    if x.bit_count() >= 2:
        h, order = g.induced(x)
        seinsche_split(h)
    if connected_mask(adj, s):
        trace.branch = "s_connected"
        claimed = s
    else:
        universal = x & ~s
        for v in bits(s):
            universal &= adj[v]
        if not universal:
            raise DefectError(f"G[S] disconnected and no vertex of X is adjacent to all of S = {_sorted(s)}")
        trace.branch = "universal_vertex"
        trace.y = (universal & -universal).bit_length() - 1
        claimed = s | (1 << trace.y)
    if claimed != x:
        trace.notes.append(f"X differs from the branch set {_sorted(claimed)}")
    trace.satisfied = x.bit_count() <= trace.bound
    if d_min and not trace.satisfied:
        raise DefectError(f"|X| = {x.bit_count()} exceeds gamma + 1 = {trace.bound}")
    return trace


def theorem3_pipeline(g: Graph, d: VertexSet | None = None, *, checked: bool = False) -> ConstructionTrace:
    """Connected dominating set of size at most 2 gamma in a connected (P8, C8)-free graph."""
    d_mask, d_min = _check_input(g, ClassSpec((8,), (8,)), d, checked)
    n, adj, closed = g.n, g.adj, g.closed
    comps, c, x, missed, picks, s = _scaffold(g, d_mask)
    if has_induced_path(adj, 6, x):
        raise DefectError(f"G[X] contains an induced P6 (X = {_sorted(x)})")
    trace = ConstructionTrace(
        theorem="p8c8",
        D=VertexSet(n, d_mask),
        D_components=[VertexSet(n, m) for m in comps],
        C=VertexSet(n, c),
        X=VertexSet(n, x),
        I=missed,
        picks=picks,
        S=VertexSet(n, s),
        bound=2 * d_mask.bit_count(),
        final=VertexSet(n, x),
        satisfied=False,
        d_is_minimum=d_min,
    )
    h, order = g.induced(x)
    found = find_structured_cds(h)
    y = _lift(order, found.Y.mask)
    trace.structure = found.kind
    trace.Y = VertexSet(n, y)
    if found.kind == "c6":
        u = [order[i] for i in found.order]
        trace.Y_order = tuple(u)
        y_prime = _lift(order, shrink_c6(h, found.order).mask)
        trace.Y_prime = VertexSet(n, y_prime)
        assembled = s | y_prime
    else:
        a = _lift(order, found.bipartition[0].mask)
        b = _lift(order, found.bipartition[1].mask)
        y_picks = {}
        for i, di in enumerate(comps):
            if i in missed:
                cand = y & closed[picks[i]]
            else:
                cand = 0
                for v in bits(di & x):
                    cand |= closed[v]
                cand &= y
            if not cand:
                raise DefectError(f"Y does not dominate the X-side of component {i}")
            y_picks[i] = (cand & -cand).bit_length() - 1
        picked = 0
        for v in y_picks.values():
            picked |= 1 << v
        if not a & picked:
            a, b = b, a
        trace.A, trace.B = VertexSet(n, a), VertexSet(n, b)
        trace.y_picks = y_picks
        if b & picked or not b:
            assembled = s | picked
        else:
            z = (b & -b).bit_length() - 1
            l = next(i for i, di in enumerate(comps) if closed[z] & di)
            trace.z, trace.l = z, l
            rest = 0
            for i, v in y_picks.items():
                if i != l:
                    rest |= 1 << v
            if not a & rest:
                raise DefectError("no A-side pick remains after dropping component l")
            assembled = s | rest | (1 << z)
    trace.assembled = VertexSet(n, assembled)
    if cds_mask(g, assembled):
        final = minimalize_cds_mask(g, assembled)
    else:
        trace.notes.append(f"assembled set {_sorted(assembled)} is not a CDS of G; falling back to X")
        final = x
    trace.final = VertexSet(n, final)
    trace.satisfied = final.bit_count() <= trace.bound
    if d_min and not trace.satisfied:
        raise DefectError(f"final CDS of size {final.bit_count()} exceeds 2 gamma = {trace.bound}")
    return trace
