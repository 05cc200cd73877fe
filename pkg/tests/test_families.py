import networkx as nx
import pytest

from forcelab.families import (
    build,
    complete_bipartite,
    cycle,
    generalized_petersen,
    half_cube_set,
    hypercube,
    path,
    random_tree,
    wheel,
)
from forcelab.graph import GraphError, members, popcount
from forcelab.solver import min_leaky_forcing


@pytest.mark.parametrize("d", range(1, 8))
def test_hypercube_regular(d):
    g = hypercube(d)
    assert g.n == 2**d
    assert set(g.degrees()) == {d}
    assert g.num_edges == d * 2 ** (d - 1)


def test_hypercube_small():
    assert hypercube(1).edges() == [(0, 1)]
    assert hypercube(3).num_edges == 12
    assert hypercube(4).num_edges == 32


@pytest.mark.parametrize("d", [0, 8])
def test_hypercube_range(d):
    with pytest.raises(GraphError):
        hypercube(d)


@pytest.mark.parametrize("d", range(1, 8))
def test_half_cube_spans_subcube(d):
    g = hypercube(d)
    q = half_cube_set(d)
    assert popcount(q) == 2 ** (d - 1)
    assert set(g.induced_degrees(q).values()) == {d - 1}


def test_half_cube_low_dims():
    g = hypercube(2)
    a, b = members(half_cube_set(2))
    assert g.adj[a] >> b & 1
    assert members(half_cube_set(1)) == [0]
    sub = hypercube(3).to_networkx().subgraph(members(half_cube_set(3)))
    assert nx.is_isomorphic(sub, nx.cycle_graph(4))


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (5, 1), (5, 2), (6, 2), (7, 3), (10, 4)])
def test_gp_cubic(n, k):
    g = generalized_petersen(n, k)
    assert g.n == 2 * n
    assert set(g.degrees()) == {3}
    assert g.num_edges == 3 * n


def test_gp_layout():
    g = generalized_petersen(5, 2)
    assert g.neighbors(0) == [1, 4, 5]
    assert g.neighbors(5) == [0, 7, 8]
    assert nx.is_isomorphic(g.to_networkx(), nx.petersen_graph())


def test_gp_prism_is_cube():
    g = generalized_petersen(4, 1)
    q = hypercube(3)
    assert nx.is_isomorphic(g.to_networkx(), q.to_networkx())
    for leaks in range(4):
        assert min_leaky_forcing(g, leaks).z_value == min_leaky_forcing(q, leaks).z_value


def test_gp_prism_triangle():
    g = generalized_petersen(3, 1)
    assert (g.n, g.num_edges) == (6, 9)


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (6, 0), (2, 1)])
def test_gp_bad_skip(n, k):
    with pytest.raises(GraphError):
        generalized_petersen(n, k)


def test_complete_bipartite():
    assert nx.is_isomorphic(complete_bipartite(2, 2).to_networkx(), nx.cycle_graph(4))
    g = complete_bipartite(3, 2)
    assert (g.n, g.num_edges) == (5, 6)
    assert sorted(g.degrees()) == [2, 2, 2, 3, 3]
    assert complete_bipartite(1, 1).edges() == [(0, 1)]


def test_wheel():
    assert nx.is_isomorphic(wheel(3).to_networkx(), nx.complete_graph(4))
    g = wheel(5)
    assert (g.n, g.num_edges) == (6, 10)
    assert wheel(4).degree(4) == 4
    assert set(wheel(7).degrees()[:7]) == {3}


def test_path_cycle():
    assert path(1).n == 1 and path(1).num_edges == 0
    assert cycle(3).edges() == [(0, 1), (0, 2), (1, 2)]


@pytest.mark.parametrize("seed", range(25))
def test_random_tree_is_tree(seed):
    g = random_tree(7, seed)
    assert g.num_edges == 6
    assert nx.is_tree(g.to_networkx())


def test_random_tree_pinned():
    # Frozen so the Pruefer decoding stays portable across versions.
    assert random_tree(7, 0).edges() == [(0, 3), (0, 6), (1, 6), (2, 3), (3, 5), (4, 6)]
    assert random_tree(9, 5).edges() == [(0, 3), (0, 5), (0, 8), (1, 4), (2, 5), (3, 7), (4, 8), (6, 7)]
    assert random_tree(1, 3).n == 1
    assert random_tree(2, 3).edges() == [(0, 1)]


def test_determinism():
    for make in (lambda: hypercube(5), lambda: generalized_petersen(7, 3), lambda: random_tree(9, 11)):
        assert make().adj == make().adj


def test_build():
    assert build("gp", n=5).name == "GP(5,1)"
    assert build("hypercube", d=3).n == 8
    with pytest.raises(GraphError):
        build("wheel")
    with pytest.raises(GraphError):
        build("grid", n=3)
