"""Forbidden induced subgraph detection with explicit witnesses.

Paths and cycles are found by depth-first extension of induced paths;
fixed patterns by backtracking induced-subgraph isomorphism.  Candidates are
always tried in ascending vertex order, so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, bits

__all__ = [
    "ClassSpec",
    "FreenessWitness",
    "find_induced_path",
    "find_induced_cycle",
    "contains_induced",
    "is_member",
    "parse_class_spec",
    "verify_witness",
    "PATTERNS",
]


def _pattern_h() -> Graph:
    from .families import gen_pattern_H

    return gen_pattern_H()


PATTERNS: dict[str, Callable[[], Graph]] = {"H": _pattern_h}


@dataclass(frozen=True)
class ClassSpec:
    forbidden_paths: tuple[int, ...] = ()
    forbidden_cycles: tuple[int, ...] = ()
    forbidden_patterns: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "forbidden_paths", tuple(self.forbidden_paths))
        object.__setattr__(self, "forbidden_cycles", tuple(self.forbidden_cycles))
        object.__setattr__(self, "forbidden_patterns", tuple(self.forbidden_patterns))
        if any(k < 1 for k in self.forbidden_paths):
            raise ValueError("path lengths must be >= 1")
        if any(k < 3 for k in self.forbidden_cycles):
            raise ValueError("cycle lengths must be >= 3")
        for name in self.forbidden_patterns:
            if name not in PATTERNS:
                raise ValueError(f"unknown pattern {name!r}")

    @classmethod
    def pk_ck(cls, k: int) -> "ClassSpec":
        """The class of (P_k, C_k)-free graphs."""
        return cls((k,), (k,) if k >= 3 else ())

    def __str__(self) -> str:
        toks = [f"P{k}" for k in self.forbidden_paths]
        toks += [f"C{k}" for k in self.forbidden_cycles]
        toks += list(self.forbidden_patterns)
        return ",".join(toks)


def parse_class_spec(text: str) -> ClassSpec:
    """Parse ``"P6,C6"`` or ``"P9,C9,H"`` (case-insensitive)."""
    paths, cycles, patterns = [], [], []
    for raw in text.split(","):
        tok = raw.strip()
        if not tok:
            continue
        up = tok.upper()
        if up in PATTERNS:
            patterns.append(up)
        elif up[0] in "PC" and up[1:].isdigit():
            (paths if up[0] == "P" else cycles).append(int(up[1:]))
        else:
            raise ValueError(f"unknown class token {tok!r}")
    if not (paths or cycles or patterns):
        raise ValueError("empty class specification")
    return ClassSpec(tuple(paths), tuple(cycles), tuple(patterns))


@dataclass(frozen=True)
class FreenessWitness:
    """An induced copy of a forbidden graph.

    For paths and cycles ``vertices`` lists the host vertices in path/cycle
    order; for patterns ``vertices[p]`` is the host image of pattern vertex p.
    """

    kind: str
    vertices: tuple[int, ...]
    name: str = field(default="")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "name": self.name, "vertices": list(self.vertices)}


def _path_search(adj, k: int, start_pool: int, within: int):
    """First induced path on k vertices inside ``within`` starting from ``start_pool``."""
    path = []

    def extend(tail: int, blocked: int) -> bool:
        # blocked: path vertices and neighbours of all path vertices except the tail
        if len(path) == k:
            return True
        cand = adj[tail] & within & ~blocked
        nb = blocked | adj[tail] | (1 << tail)
        for w in bits(cand):
            path.append(w)
            if extend(w, nb):
                return True
            path.pop()
        return False

    for s in bits(start_pool & within):
        path.append(s)
        if extend(s, 1 << s):
            return tuple(path)
        path.pop()
    return None


def find_induced_path(g: Graph, k: int, within: int | None = None) -> FreenessWitness | None:
    """Least induced P_k in ``g`` (optionally restricted to the vertex mask ``within``)."""
    if k < 1:
        raise ValueError("path length must be >= 1")
    mask = g.full_mask if within is None else within
    if mask.bit_count() < k:
        return None
    found = _path_search(g.adj, k, mask, mask)
    return None if found is None else FreenessWitness("path", found, f"P{k}")


def has_induced_path(adj, k: int, within: int) -> bool:
    if within.bit_count() < k:
        return False
    return _path_search(adj, k, within, within) is not None


def _cycle_search(adj, k: int, within: int):
    path = []

    def extend(head: int, tail: int, blocked: int) -> bool:
        # blocked: vertices below the head, path vertices, and neighbours of
        # path vertices other than the head and the tail
        pos = len(path)
        cand = adj[tail] & within & ~blocked
        if pos == k - 1:
            # closing vertex: adjacent to the head, above the second vertex to skip the mirror copy
            cand &= adj[head] & ~((2 << path[1]) - 1)
            if cand:
                path.append((cand & -cand).bit_length() - 1)
                return True
            return False
        if pos >= 2:
            cand &= ~adj[head]
        nb = blocked | (1 << tail)
        if tail != head:
            nb |= adj[tail]
        for w in bits(cand):
            path.append(w)
            if extend(head, w, nb):
                return True
            path.pop()
        return False

    for s in bits(within):
        path.append(s)
        if extend(s, s, (2 << s) - 1):
            return tuple(path)
        path.pop()
    return None


def find_induced_cycle(g: Graph, k: int, within: int | None = None) -> FreenessWitness | None:
    """Least induced C_k, listed in cyclic order starting from its smallest vertex."""
    if k < 3:
        raise ValueError("cycle length must be >= 3")
    mask = g.full_mask if within is None else within
    if mask.bit_count() < k:
        return None
    found = _cycle_search(g.adj, k, mask)
    return None if found is None else FreenessWitness("cycle", found, f"C{k}")


def has_induced_cycle(adj, k: int, within: int) -> bool:
    if within.bit_count() < k:
        return False
    return _cycle_search(adj, k, within) is not None


def contains_induced(g: Graph, pattern: Graph) -> FreenessWitness | None:
    """Induced embedding of ``pattern`` into ``g``, or None if ``g`` is pattern-free."""
    p = pattern.n
    if p > g.n:
        return None
    if p == 0:
        return FreenessWitness("pattern", ())
    order = sorted(range(p), key=lambda v: (-pattern.degree(v), v))
    deg = [g.degree(v) for v in range(g.n)]
    pdeg = [pattern.degree(v) for v in range(p)]
    full = g.full_mask
    image = [-1] * p

    def place(pos: int, used: int) -> bool:
        if pos == p:
            return True
        pv = order[pos]
        cand = full & ~used
        for q in order[:pos]:
            h = image[q]
            if pattern.adj[pv] >> q & 1:
                cand &= g.adj[h]
            else:
                cand &= ~g.adj[h]
        for h in bits(cand):
            if deg[h] < pdeg[pv]:
                continue
            image[pv] = h
            if place(pos + 1, used | (1 << h)):
                return True
        image[pv] = -1
        return False

    if place(0, 0):
        return FreenessWitness("pattern", tuple(image))
    return None


def is_member(g: Graph, spec: ClassSpec) -> tuple[bool, FreenessWitness | None]:
    """Membership test; the witness is the first hit in the order paths, cycles, patterns."""
    for k in sorted(spec.forbidden_paths):
        w = find_induced_path(g, k)
        if w is not None:
            return False, w
    for k in sorted(spec.forbidden_cycles):
        w = find_induced_cycle(g, k)
        if w is not None:
            return False, w
    for name in spec.forbidden_patterns:
        w = contains_induced(g, PATTERNS[name]())
        if w is not None:
            return False, FreenessWitness("pattern", w.vertices, name)
    return True, None


def verify_witness(g: Graph, w: FreenessWitness, pattern: Graph | None = None) -> bool:
    """Re-check a witness edge by edge against the host graph."""
    vs = w.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return False
    m = len(vs)
    if w.kind == "path":
        want = {(i, i + 1) for i in range(m - 1)}
    elif w.kind == "cycle":
        want = {(i, (i + 1) % m) for i in range(m)} | {((i + 1) % m, i) for i in range(m)}
    elif w.kind == "pattern":
        if pattern is None:
            pattern = PATTERNS[w.name]()
        if pattern.n != m:
            return False
        return all(
            pattern.has_edge(i, j) == g.has_edge(vs[i], vs[j])
            for i in range(m) for j in range(i + 1, m)
        )
    else:
        return False
    for i in range(m):
        for j in range(i + 1, m):
            if g.has_edge(vs[i], vs[j]) != ((i, j) in want or (j, i) in want):
                return False
    return True
