"""Simple undirected graphs with bitmask adjacency.

Vertex sets are plain ``int`` bitmasks: bit ``v`` set means vertex ``v`` is a
member. Python ints are arbitrary precision, so there is no hard capacity, but
the families and the solver are sized for graphs of at most 128 vertices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

VertexSet = int
SetLike = Union[int, Iterable[int]]

MAX_VERTICES = 128


class GraphError(ValueError):
    """Raised for malformed graph input or out-of-range vertex ids."""


class EdgeListParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def vset(ids: Iterable[int]) -> VertexSet:
    m = 0
    for v in ids:
        if v < 0:
            raise GraphError(f"negative vertex id {v}")
        m |= 1 << v
    return m


def as_mask(s: SetLike) -> VertexSet:
    if isinstance(s, int):
        if s < 0:
            raise GraphError("vertex set mask must be nonnegative")
        return s
    return vset(s)


def members(s: VertexSet) -> list[int]:
    """Ids in ``s`` in ascending order."""
    out = []
    while s:
        low = s & -s
        out.append(low.bit_length() - 1)
        s ^= low
    return out


def iter_members(s: VertexSet) -> Iterator[int]:
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def popcount(s: VertexSet) -> int:
    return bin(s).count("1")


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def complement_set(s: SetLike, n: int) -> VertexSet:
    return full_set(n) & ~as_mask(s)


def set_key(s: VertexSet) -> tuple[int, ...]:
    """Sort key giving lexicographic order on ascending id tuples."""
    return tuple(members(s))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = full_set(self.n)
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {u} has ids outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in iter_members(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), name)

    @property
    def vertices(self) -> VertexSet:
        return full_set(self.n)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def check_set(self, s: SetLike) -> VertexSet:
        m = as_mask(s)
        if m & ~self.vertices:
            bad = members(m & ~self.vertices)
            raise GraphError(f"vertex ids {bad} out of range 0..{self.n - 1}")
        return m

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        self.check_vertex(v)
        return members(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def induced_degrees(self, s: SetLike) -> dict[int, int]:
        m = as_mask(s)
        return {v: popcount(self.adj[v] & m) for v in iter_members(m)}

    def to_edge_list(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self):
        label = self.name or "Graph"
        return f"<{label} n={self.n} m={self.num_edges}>"


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


_INT = re.compile(r"^\d+$")


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse ``u v`` lines into a :class:`Graph`.

    Blank lines and ``#`` comments are skipped. An optional ``n <count>``
    header fixes the vertex count; otherwise it is one more than the largest
    id seen. Repeated edges collapse, self-loops are rejected.
    """
    declared = None
    edges: set[tuple[int, int]] = set()
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or not _INT.match(tokens[1]):
                raise EdgeListParseError(lineno, f"bad header {line!r}")
            if declared is not None:
                raise EdgeListParseError(lineno, "duplicate n header")
            declared = int(tokens[1])
            continue
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, f"expected two ids, got {line!r}")
        for tok in tokens:
            if not _INT.match(tok):
                raise EdgeListParseError(lineno, f"not a nonnegative integer: {tok!r}")
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop at vertex {u}")
        edges.add((min(u, v), max(u, v)))
        top = max(top, u, v)
    n = declared if declared is not None else top + 1
    if top >= n:
        raise GraphError(f"vertex id {top} exceeds declared n={n}")
    return Graph.from_edges(n, sorted(edges), name)
