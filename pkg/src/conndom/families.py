"""Generators for the named graphs: paths, cycles, F_k, H_k, G_k and the pattern H.

Vertex numbering is fixed so that certificates and traces are comparable
between runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

__all__ = [
    "gen_path",
    "gen_cycle",
    "gen_F",
    "gen_H",
    "gen_G",
    "gen_pattern_H",
    "FamilyId",
    "parse_family",
]


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_F(k: int) -> Graph:
    """``k`` copies of C4 glued at a common vertex 0, plus the path 0-1-2.

    Copy ``i`` occupies vertices ``3+3i .. 5+3i`` as ``a_i, m_i, c_i`` with the
    4-cycle ``0, a_i, m_i, c_i``.
    """
    if k < 1:
        raise ValueError("F_k needs k >= 1")
    edges = [(0, 1), (1, 2)]
    for i in range(k):
        a, m, c = 3 + 3 * i, 4 + 3 * i, 5 + 3 * i
        edges += [(0, a), (a, m), (m, c), (c, 0)]
    return Graph(3 * k + 3, edges)


def _h_edges(k: int) -> list[tuple[int, int]]:
    edges = []
    for i in range(k):
        a, b, v = 3 * i, 3 * i + 1, 3 * i + 2
        edges += [(a, b), (b, v)]
    tops = [3 * i + 2 for i in range(k)]
    edges += [(u, w) for i, u in enumerate(tops) for w in tops[i + 1:]]
    return edges


def gen_H(k: int) -> Graph:
    """``k`` legs ``a_i - b_i - v_i`` (vertices ``3i, 3i+1, 3i+2``) with the ``v_i`` forming a clique."""
    if k < 1:
        raise ValueError("H_k needs k >= 1")
    return Graph(3 * k, _h_edges(k))


def gen_G(k: int) -> Graph:
    """``H_k`` with a pendant ``a'_i = 3k + i`` attached to every ``a_i``."""
    if k < 1:
        raise ValueError("G_k needs k >= 1")
    edges = _h_edges(k) + [(3 * i, 3 * k + i) for i in range(k)]
    return Graph(4 * k, edges)


# a1..a4 = 0..3, b1..b4 = 4..7, c = 8, d = 9
PATTERN_H_LABELS = ("a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "c", "d")


def gen_pattern_H() -> Graph:
    """The 10-vertex graph H: two 4-paths whose ends a1, b1 form a triangle with c, and a pendant d on c."""
    return Graph(10, [
        (0, 1), (1, 2), (2, 3),
        (4, 5), (5, 6), (6, 7),
        (0, 4), (0, 8), (4, 8), (8, 9),
    ])


_PARAMETRIC = {
    "path": (gen_path, 1),
    "cycle": (gen_cycle, 3),
    "F": (gen_F, 1),
    "H": (gen_H, 1),
    "G": (gen_G, 1),
}


@dataclass(frozen=True)
class FamilyId:
    name: str
    parameter: int | None = None

    def __post_init__(self):
        if self.name == "Hpattern":
            if self.parameter is not None:
                raise ValueError("Hpattern takes no parameter")
            return
        if self.name not in _PARAMETRIC:
            raise ValueError(f"unknown family {self.name!r}")
        lowest = _PARAMETRIC[self.name][1]
        if self.parameter is None or self.parameter < lowest:
            raise ValueError(f"family {self.name} needs parameter >= {lowest}")

    def build(self) -> Graph:
        if self.name == "Hpattern":
            return gen_pattern_H()
        return _PARAMETRIC[self.name][0](self.parameter)

    def __str__(self) -> str:
        return self.name if self.parameter is None else f"{self.name}:{self.parameter}"


def parse_family(token: str) -> FamilyId:
    """Parse tokens such as ``path:8``, ``cycle:9``, ``F:3``, ``H:4``, ``G:4``, ``Hpattern``."""
    token = token.strip()
    if token == "Hpattern":
        return FamilyId("Hpattern")
    name, sep, param = token.partition(":")
    if not sep:
        raise ValueError(f"family token {token!r} needs a parameter, e.g. {token}:3")
    try:
        value = int(param)
    except ValueError:
        raise ValueError(f"bad parameter in family token {token!r}") from None
    return FamilyId(name, value)
