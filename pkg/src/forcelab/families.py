"""Generators for the graph families under study.

Every generator fixes its vertex-id layout so that named constructions can
be addressed by formula:

* ``hypercube(d)``: id = the binary word, bit ``i`` holding coordinate ``i+1``.
* ``generalized_petersen(n, k)``: outer cycle ``u_{i+1} -> i``, inner vertices
  ``x_{i+1} -> n+i``, spokes ``i ~ n+i``.
* ``complete_bipartite(m, n)``: side X is ``0..m-1``, side Y is ``m..m+n-1``.
* ``wheel(n)``: cycle ``0..n-1``, hub ``n``.
* ``random_tree(n, seed)``: decoded from a Prüfer sequence whose entries are
  ``random.Random(seed).randrange(n)`` drawn in order.
"""

from __future__ import annotations

import random

import networkx as nx

from .graph import MAX_VERTICES, Graph, GraphError, VertexSet, full_set

MAX_CUBE_DIM = 7


def hypercube(d: int) -> Graph:
    if not 1 <= d <= MAX_CUBE_DIM:
        raise GraphError(f"hypercube dimension must be in 1..{MAX_CUBE_DIM}, got {d}")
    n = 1 << d
    rows = tuple(sum(1 << (v ^ (1 << i)) for i in range(d)) for v in range(n))
    return Graph(n, rows, f"Q{d}")


def half_cube_set(d: int) -> VertexSet:
    """Words with coordinate 1 (bit 0) equal to 0; they span a (d-1)-subcube."""
    if not 1 <= d <= MAX_CUBE_DIM:
        raise GraphError(f"hypercube dimension must be in 1..{MAX_CUBE_DIM}, got {d}")
    m = 0
    for v in range(0, 1 << d, 2):
        m |= 1 << v
    return m


def generalized_petersen(n: int, k: int = 1) -> Graph:
    if n < 3:
        raise GraphError(f"generalized Petersen graph needs n >= 3, got {n}")
    if not 1 <= k <= (n - 1) // 2:
        raise GraphError(f"skip k must be in 1..{(n - 1) // 2} for n={n}, got {k}")
    if 2 * n > MAX_VERTICES:
        raise GraphError(f"GP({n},{k}) exceeds {MAX_VERTICES} vertices")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + k) % n))
        edges.append((i, n + i))
    return Graph.from_edges(2 * n, edges, f"GP({n},{k})")


def prism_outer(n: int) -> VertexSet:
    """The outer cycle U of GP(n, k)."""
    return full_set(n)


def prism_inner(n: int) -> VertexSet:
    """The inner vertices X of GP(n, k)."""
    return full_set(n) << n


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError(f"K_(m,n) needs m, n >= 1, got ({m}, {n})")
    edges = [(x, m + y) for x in range(m) for y in range(n)]
    return Graph.from_edges(m + n, edges, f"K({m},{n})")


def wheel(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"wheel needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, edges, f"W{n}")


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise GraphError(f"tree needs n >= 1, got {n}")
    name = f"T{n}s{seed}"
    if n == 1:
        return Graph(1, (0,), name)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    t = nx.from_prufer_sequence(seq)
    return Graph.from_edges(n, t.edges(), name)


FAMILIES = {
    "hypercube": (hypercube, ("d",)),
    "gp": (generalized_petersen, ("n", "k")),
    "bipartite": (complete_bipartite, ("m", "n")),
    "wheel": (wheel, ("n",)),
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "tree": (random_tree, ("n", "seed")),
}

LAYOUTS = {
    "hypercube": "--d D: ids 0..2^D-1; id is the 0/1 word with bit i = coordinate i+1; "
    "half-cube = even ids (coordinate 1 equal to 0)",
    "gp": "--n N --k K: ids 0..N-1 outer cycle u_1..u_N (i ~ i+1 mod N); "
    "ids N..2N-1 inner x_1..x_N ((N+i) ~ (N+(i+K) mod N)); spokes i ~ N+i",
    "bipartite": "--m M --n N: ids 0..M-1 side X, ids M..M+N-1 side Y; all X-Y edges",
    "wheel": "--n N: ids 0..N-1 cycle, id N hub",
    "path": "--n N: ids 0..N-1 in order",
    "cycle": "--n N: ids 0..N-1 around the cycle",
    "tree": "--n N --seed S: Pruefer sequence of length N-2, entries "
    "random.Random(S).randrange(N), decoded to a labeled tree",
}


def build(family: str, **params: int) -> Graph:
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    fn, names = FAMILIES[family]
    missing = [p for p in names if params.get(p) is None]
    if family == "gp" and missing == ["k"]:
        missing = []
        params["k"] = 1
    if missing:
        raise GraphError(f"family {family!r} needs parameters {', '.join('--' + p for p in missing)}")
    return fn(*(params[p] for p in names))
