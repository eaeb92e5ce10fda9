"""Exact domination and connected domination numbers with certificates.

Optimal values come from iterative deepening over the set size with
set-cover branching: the lowest undominated vertex must be dominated by one of
its closed neighbours, and each tried neighbour is excluded from the later
branches.  For connected domination a dominated-but-disconnected set is
extended by branching on the neighbours of its first component.  Once the
optimum is known, the lexicographically least optimal set is extracted by an
include-first scan over the vertices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BudgetExceeded, ContractViolation
from .graph import Graph, VertexSet, _own, _reach, bits, component_masks, connected_mask

__all__ = [
    "DominationCertificate",
    "is_dominating",
    "is_cds",
    "gamma",
    "gamma_c",
    "gamma_value",
    "gamma_c_value",
    "minimalize_cds",
    "minimalize_connector",
    "duchet_meyniel_check",
]


@dataclass(frozen=True)
class DominationCertificate:
    parameter: str  # "gamma" | "gamma_c"
    value: int
    witness: VertexSet

    def to_dict(self) -> dict:
        return {"parameter": self.parameter, "value": self.value, "witness": self.witness.sorted()}


def dominated_by(closed: tuple[int, ...], mask: int) -> int:
    dom = 0
    for v in bits(mask):
        dom |= closed[v]
    return dom


def is_dominating(g: Graph, s: VertexSet) -> bool:
    _own(g, s)
    return dominated_by(g.closed, s.mask) == g.full_mask


def cds_mask(g: Graph, mask: int) -> bool:
    return dominated_by(g.closed, mask) == g.full_mask and connected_mask(g.adj, mask)


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise ContractViolation("connected domination is only defined for connected graphs")


def is_cds(g: Graph, s: VertexSet) -> bool:
    _own(g, s)
    _require_connected(g)
    return cds_mask(g, s.mask)


# --- search -------------------------------------------------------------------


def _search(g: Graph, budget: int, connected: bool, deadline: float | None = None,
            cover: int = 0) -> int | None:
    """Some (connected) dominating set of size <= budget, or None.

    ``cover`` is the largest closed-neighbourhood size; computed when 0.
    """
    closed, adj, full = g.closed, g.adj, g.full_mask
    cover = cover or max(c.bit_count() for c in closed)
    ticks = [0]

    def rec(chosen: int, dom: int, excl: int, r: int) -> int | None:
        if deadline is not None:
            ticks[0] += 1
            if ticks[0] & 1023 == 1 and time.monotonic() > deadline:
                raise BudgetExceeded("solver time budget exhausted")
        und = full & ~dom
        if und:
            if r == 0 or -(-und.bit_count() // cover) > r:
                return None
            if connected and chosen and _reach(adj, chosen & -chosen, full & ~excl) & chosen != chosen:
                return None
            u = (und & -und).bit_length() - 1
            for v in bits(closed[u] & ~excl):
                found = rec(chosen | (1 << v), dom | closed[v], excl, r - 1)
                if found is not None:
                    return found
                excl |= 1 << v
            return None
        if not connected:
            return chosen
        comps = component_masks(adj, chosen)
        if len(comps) == 1:
            return chosen
        if r == 0:
            return None
        frontier = 0
        for v in bits(comps[0]):
            frontier |= adj[v]
        for v in bits(frontier & ~chosen & ~excl):
            found = rec(chosen | (1 << v), dom, excl, r - 1)
            if found is not None:
                return found
            excl |= 1 << v
        return None

    return rec(0, 0, 0, budget)


def _lex_least(g: Graph, size: int, connected: bool) -> int | None:
    """Lexicographically least (connected) dominating set of exactly ``size`` vertices."""
    n, closed, adj, full = g.n, g.closed, g.adj, g.full_mask
    cover = max(c.bit_count() for c in closed)
    reach_from = [0] * (n + 1)  # vertices dominated by some vertex >= i
    for i in range(n - 1, -1, -1):
        reach_from[i] = reach_from[i + 1] | closed[i]

    def rec(i: int, chosen: int, dom: int, r: int) -> int | None:
        und = full & ~dom
        if not und and (not connected or connected_mask(adj, chosen)):
            return chosen if r == 0 else None
        if r == 0 or i == n:
            return None
        if und & ~reach_from[i] or -(-und.bit_count() // cover) > r:
            return None
        if n - i < r:
            return None
        if connected and chosen:
            avail = chosen | (full & ~((1 << i) - 1))
            if _reach(adj, chosen & -chosen, avail) & chosen != chosen:
                return None
        found = rec(i + 1, chosen | (1 << i), dom | closed[i], r - 1)
        if found is not None:
            return found
        return rec(i + 1, chosen, dom, r)

    return rec(0, 0, 0, size)


def gamma_value(g: Graph, deadline: float | None = None) -> int:
    """Domination number without a certificate.  ``deadline`` is a ``time.monotonic()`` instant."""
    if g.n < 1:
        raise ContractViolation("domination number needs at least one vertex")
    cover = max(c.bit_count() for c in g.closed)
    k = -(-g.n // cover)
    while _search(g, k, False, deadline, cover) is None:
        k += 1
    return k


def gamma_c_value(g: Graph, lower: int | None = None, deadline: float | None = None) -> int:
    """Connected domination number; ``lower`` is a known lower bound such as gamma."""
    if g.n < 1:
        raise ContractViolation("connected domination number needs at least one vertex")
    _require_connected(g)
    k = gamma_value(g, deadline) if lower is None else lower
    cover = max(c.bit_count() for c in g.closed)
    while _search(g, k, True, deadline, cover) is None:
        k += 1
    return k


def gamma(g: Graph) -> DominationCertificate:
    k = gamma_value(g)
    return DominationCertificate("gamma", k, VertexSet(g.n, _lex_least(g, k, False)))


def gamma_c(g: Graph) -> DominationCertificate:
    k = gamma_c_value(g)
    return DominationCertificate("gamma_c", k, VertexSet(g.n, _lex_least(g, k, True)))


# --- minimality -----------------------------------------------------------------


def minimalize_cds_mask(g: Graph, mask: int) -> int:
    closed, adj, full = g.closed, g.adj, g.full_mask
    again = True
    while again:
        again = False
        for v in bits(mask):
            t = mask & ~(1 << v)
            if t and dominated_by(closed, t) == full and connected_mask(adj, t):
                mask = t
                again = True
                break
    return mask


def minimalize_cds(g: Graph, s: VertexSet) -> VertexSet:
    """Shrink a CDS to an inclusion-minimal one by repeatedly dropping the smallest removable vertex."""
    if not is_cds(g, s):
        raise ContractViolation(f"{s.sorted()} is not a connected dominating set")
    return VertexSet(g.n, minimalize_cds_mask(g, s.mask))


def minimalize_connector_mask(g: Graph, d: int, c: int) -> int:
    adj = g.adj
    c &= ~d
    again = True
    while again:
        again = False
        for v in bits(c):
            t = c & ~(1 << v)
            if connected_mask(adj, d | t):
                c = t
                again = True
                break
    return c


def minimalize_connector(g: Graph, d: VertexSet, c: VertexSet) -> VertexSet:
    """Inclusion-minimal ``C' ⊆ c`` keeping ``G[d ∪ C']`` connected."""
    _own(g, d)
    _own(g, c)
    if not connected_mask(g.adj, d.mask | c.mask):
        raise ContractViolation("G[d ∪ c] is not connected")
    return VertexSet(g.n, minimalize_connector_mask(g, d.mask, c.mask))


def duchet_meyniel_check(g: Graph) -> bool:
    """``gamma_c <= 3 gamma - 2``."""
    _require_connected(g)
    return gamma_c_value(g) <= 3 * gamma_value(g) - 2
