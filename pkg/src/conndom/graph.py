"""Immutable simple graphs, vertex-set algebra and graph6 / edge-list I/O.

Vertex sets are bit masks over ``0..n-1``.  Internally every algorithm in the
package works on plain ``int`` masks; :class:`VertexSet` is the typed value
handed across module boundaries.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "VertexSet",
    "Graph6Error",
    "EdgeListError",
    "bits",
    "parse_graph6",
    "write_graph6",
    "parse_edge_list",
    "components",
    "is_connected_induced",
    "complement",
]

GRAPH6_MAX_N = 62


def _bits_slow(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


_SMALL = 1 << 12
_BITS_TABLE = [_bits_slow(m) for m in range(_SMALL)]


def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask`` in ascending order."""
    if mask < _SMALL:
        return _BITS_TABLE[mask]
    return _bits_slow(mask)


class VertexSet:
    """Fixed-capacity set of vertices backed by a bit mask."""

    __slots__ = ("capacity", "mask")

    def __init__(self, capacity: int, mask: int = 0):
        if mask < 0 or mask >> capacity:
            raise ValueError(f"mask {mask:#x} has members outside 0..{capacity - 1}")
        object.__setattr__(self, "capacity", capacity)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def __reduce__(self):
        return VertexSet, (self.capacity, self.mask)

    @classmethod
    def of(cls, capacity: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < capacity:
                raise ValueError(f"vertex {v} outside 0..{capacity - 1}")
            mask |= 1 << v
        return cls(capacity, mask)

    @classmethod
    def full(cls, capacity: int) -> "VertexSet":
        return cls(capacity, (1 << capacity) - 1)

    def _check(self, other: "VertexSet") -> None:
        if self.capacity != other.capacity:
            raise ValueError("vertex sets have different capacities")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.capacity, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.capacity, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.capacity, self.mask & ~other.mask)

    def __invert__(self) -> "VertexSet":
        return VertexSet(self.capacity, ((1 << self.capacity) - 1) & ~self.mask)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.capacity == other.capacity and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.capacity, self.mask))

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __repr__(self) -> str:
        return f"VertexSet({self.capacity}, {sorted(self)})"

    def sorted(self) -> list[int]:
        return list(bits(self.mask))


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open-neighbourhood bit mask of ``v``.
    """

    __slots__ = ("n", "adj", "_closed")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._init(n, tuple(adj))

    def _init(self, n: int, adj: tuple[int, ...]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_closed", tuple(a | (1 << v) for v, a in enumerate(adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return Graph.from_adjacency, (self.adj,)

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> "Graph":
        """Build from neighbourhood masks; checks symmetry and irreflexivity."""
        adj = tuple(adj)
        n = len(adj)
        for v, a in enumerate(adj):
            if a >> n:
                raise ValueError(f"neighbourhood of {v} exceeds vertex range")
            if a >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        g = cls.__new__(cls)
        g._init(n, adj)
        return g

    @property
    def closed(self) -> tuple[int, ...]:
        """Closed-neighbourhood masks ``N[v]``."""
        return self._closed

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def vset(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def induced(self, s: VertexSet | int) -> tuple["Graph", list[int]]:
        """Return ``G[s]`` relabelled to ``0..|s|-1`` and the list mapping new -> old."""
        mask = s.mask if isinstance(s, VertexSet) else s
        order = list(bits(mask))
        index = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            a = 0
            for u in bits(self.adj[v] & mask):
                a |= 1 << index[u]
            adj.append(a)
        g = Graph.__new__(Graph)
        g._init(len(order), tuple(adj))
        return g, order

    def is_connected(self) -> bool:
        return self.n > 0 and _reach(self.adj, 1, self.full_mask) == self.full_mask

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _reach(adj: tuple[int, ...], start: int, within: int) -> int:
    """Vertices of ``within`` reachable from the ``start`` mask inside ``G[within]``."""
    seen = start & within
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def component_masks(adj: tuple[int, ...], mask: int) -> list[int]:
    """Components of ``G[mask]`` as masks, ordered by smallest member."""
    out = []
    rest = mask
    while rest:
        comp = _reach(adj, rest & -rest, mask)
        out.append(comp)
        rest &= ~comp
    return out


def connected_mask(adj: tuple[int, ...], mask: int) -> bool:
    """True iff ``G[mask]`` is connected; the empty set counts as disconnected."""
    return mask != 0 and _reach(adj, mask & -mask, mask) == mask


def components(g: Graph, s: VertexSet) -> list[VertexSet]:
    """Vertex sets of the connected components of ``G[s]``, ordered by smallest member."""
    _own(g, s)
    return [VertexSet(g.n, m) for m in component_masks(g.adj, s.mask)]


def is_connected_induced(g: Graph, s: VertexSet) -> bool:
    _own(g, s)
    if not s:
        raise ValueError("connectivity of the empty induced subgraph is undefined")
    return connected_mask(g.adj, s.mask)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    h = Graph.__new__(Graph)
    h._init(g.n, tuple(full & ~c for c in g.closed))
    return h


def _own(g: Graph, s: VertexSet) -> None:
    if s.capacity != g.n:
        raise ValueError(f"vertex set capacity {s.capacity} does not match graph order {g.n}")


# --- graph6 -----------------------------------------------------------------


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"byte {offset}: {message}")
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    text = text.rstrip("\r\n")
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside range 63..126", i)
    n = ord(text[0]) - 63
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"graphs with more than {GRAPH6_MAX_N} vertices are not supported", 0)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(text) != expected:
        raise Graph6Error(f"expected {expected} bytes for n={n}, got {len(text)}", min(len(text), expected))
    value = 0
    for ch in text[1:]:
        value = value << 6 | (ord(ch) - 63)
    pad = 6 * (expected - 1) - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(text) - 1)
    value >>= pad
    adj = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    g = Graph.__new__(Graph)
    g._init(n, tuple(adj))
    return g


def write_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 output limited to n <= {GRAPH6_MAX_N}")
    value = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            value = value << 1 | (g.adj[i] >> j & 1)
            nbits += 1
    pad = -nbits % 6
    value <<= pad
    groups = (nbits + pad) // 6
    body = "".join(chr(63 + (value >> (6 * (groups - 1 - k)) & 63)) for k in range(groups))
    return chr(63 + n) + body


# --- edge lists -------------------------------------------------------------


class EdgeListError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise EdgeListError("missing header 'n m'", 1)
    lineno, header = lines[0]
    try:
        n, m = (int(tok) for tok in header.split())
    except ValueError:
        raise EdgeListError(f"bad header {header!r}", lineno) from None
    if n < 0 or m < 0:
        raise EdgeListError("negative count in header", lineno)
    body = lines[1:]
    if len(body) != m:
        raise EdgeListError(f"header announces {m} edges, found {len(body)}", lineno)
    adj = [0] * n
    for lineno, ln in body:
        try:
            u, v = (int(tok) for tok in ln.split())
        except ValueError:
            raise EdgeListError(f"bad edge {ln!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"vertex out of range in edge {u} {v}", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at {u}", lineno)
        if adj[u] >> v & 1:
            raise EdgeListError(f"duplicate edge {u} {v}", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    g = Graph.__new__(Graph)
    g._init(n, tuple(adj))
    return g


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"
