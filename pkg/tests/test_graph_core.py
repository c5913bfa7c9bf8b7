import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from conftest import all_xy_paths, graphs, graphs_with_terminals, to_nx
from distantpaths.graph_core import (
    INF,
    Graph,
    anti_complete,
    ball,
    components_avoiding,
    distance,
    eccentricity,
    induced_subgraph,
    is_path,
    is_xy_path,
    lift_power_paths,
    loop_erase,
    power_graph,
    shortest_xy_path,
    subdivide,
    subgraph_distance,
    trim_to_xy,
)


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def grid(rows, cols):
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def scipy_distances(g):
    n = g.vertex_count
    if not g.edges:
        m = csr_matrix((n, n))
    else:
        u, v = zip(*g.edges)
        m = csr_matrix((np.ones(len(u)), (u, v)), shape=(n, n))
    return shortest_path(m, directed=False, unweighted=True)


# --- Graph --------------------------------------------------------------


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(-1)


def test_graph_normalizes_parallel_edges():
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.adjacency == ((1,), (0, 2), (1,))


@given(graphs())
def test_adjacency_symmetric(g):
    for u in g.vertices():
        for w in g.adjacency[u]:
            assert u in g.adjacency[w]
            assert u != w


# --- distance -------------------------------------------------------------


def test_distance_examples():
    g = path_graph(4)
    assert distance(g, 0, 3) == 3
    assert distance(g, 2, 2) == 0
    two = Graph(4, [(0, 1), (2, 3)])
    assert distance(two, 0, 3) == INF
    assert math.isinf(distance(two, 0, 3))
    with pytest.raises(ValueError):
        distance(g, 0, 4)


@given(graphs(max_n=14))
def test_distance_matches_scipy(g):
    ref = scipy_distances(g)
    for u in g.vertices():
        for v in g.vertices():
            assert distance(g, u, v) == ref[u, v]


@given(graphs(max_n=10))
def test_distance_is_a_metric(g):
    n = g.vertex_count
    d = [[distance(g, u, v) for v in range(n)] for u in range(n)]
    for u in range(n):
        assert d[u][u] == 0
        for v in range(n):
            assert d[u][v] == d[v][u]
            for w in range(n):
                assert d[u][w] <= d[u][v] + d[v][w]


def test_eccentricity():
    assert eccentricity(path_graph(5), 0) == 4
    assert eccentricity(path_graph(5), 2) == 2


# --- ball -------------------------------------------------------------------


def test_ball_examples():
    g = grid(3, 3)
    assert ball(g, [4], 0) == {4}
    assert ball(g, [4], 1) == {1, 3, 4, 5, 7}
    assert ball(g, g.vertices(), 2) == set(g.vertices())
    with pytest.raises(ValueError):
        ball(g, [], 1)
    with pytest.raises(ValueError):
        ball(g, [0], -1)


@given(graphs(max_n=12), st.integers(0, 4), st.data())
def test_ball_matches_networkx(g, r, data):
    seeds = data.draw(st.frozensets(st.integers(0, g.vertex_count - 1), min_size=1))
    ref = set()
    for s in seeds:
        ref |= set(nx.single_source_shortest_path_length(to_nx(g), s, cutoff=r))
    assert ball(g, seeds, r) == ref


# --- components ---------------------------------------------------------------


def test_components_examples():
    g = path_graph(3)
    assert components_avoiding(g, []) == [frozenset({0, 1, 2})]
    assert components_avoiding(g, [1]) == [frozenset({0}), frozenset({2})]
    assert components_avoiding(g, g.vertices()) == []


@given(graphs(max_n=12), st.data())
def test_components_partition(g, data):
    removed = data.draw(st.frozensets(st.integers(0, g.vertex_count - 1)))
    comps = components_avoiding(g, removed)
    union = set().union(*comps) if comps else set()
    assert union == set(g.vertices()) - removed
    assert sum(len(c) for c in comps) == len(union)
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)
    part = {v: i for i, c in enumerate(comps) for v in c}
    for u, v in g.edges:
        if u in part and v in part:
            assert part[u] == part[v]
    ref = nx.connected_components(to_nx(g).subgraph(union))
    assert sorted(map(sorted, comps)) == sorted(map(sorted, ref))


# --- subgraph distance ------------------------------------------------------------


def test_subgraph_distance_examples():
    g = path_graph(6)
    assert subgraph_distance(g, [1, 2], [2, 3]) == 0
    assert subgraph_distance(g, [0], [5]) == 5
    assert not anti_complete(g, [0, 1], [2])
    assert anti_complete(g, [0], [2])
    with pytest.raises(ValueError):
        subgraph_distance(g, [], [1])


@given(graphs(max_n=10), st.data())
def test_subgraph_distance_is_min_over_pairs(g, data):
    ids = st.integers(0, g.vertex_count - 1)
    s1 = data.draw(st.frozensets(ids, min_size=1))
    s2 = data.draw(st.frozensets(ids, min_size=1))
    ref = scipy_distances(g)
    assert subgraph_distance(g, s1, s2) == min(ref[u, v] for u in s1 for v in s2)
    crossing = any(g.has_edge(u, v) for u in s1 for v in s2)
    assert anti_complete(g, s1, s2) == (not (s1 & s2) and not crossing)


# --- X-Y paths --------------------------------------------------------------------


def test_shortest_xy_path_examples():
    g = path_graph(3)
    assert shortest_xy_path(g, {1}, {1, 2}) == (1,)
    assert shortest_xy_path(g, set(), {2}) is None
    assert shortest_xy_path(g, {0, 1}, {2}) == (1, 2)
    assert shortest_xy_path(Graph(2), {0}, {1}) is None


@given(graphs_with_terminals(max_n=8))
def test_shortest_xy_path_is_shortest_by_enumeration(case):
    g, x, y = case
    everything = all_xy_paths(g, x, y)
    got = shortest_xy_path(g, x, y)
    if not everything:
        assert got is None
        return
    assert got is not None
    assert is_xy_path(g, got, x, y)
    assert len(got) == min(len(p) for p in everything)


@given(graphs_with_terminals(max_n=12))
def test_shortest_xy_path_is_isometric(case):
    g, x, y = case
    p = shortest_xy_path(g, x, y)
    if p is None:
        return
    for i in range(len(p)):
        for j in range(len(p)):
            assert distance(g, p[i], p[j]) == abs(i - j)


def test_trim_and_loop_erase():
    assert trim_to_xy([0, 1, 2, 3, 4], {0, 2}, {3, 4}) == (2, 3)
    assert loop_erase([0, 1, 2, 1, 3]) == [0, 1, 3]
    assert loop_erase([0, 1, 2, 3, 1, 4, 0, 5]) == [0, 5]


def test_is_path():
    g = path_graph(4)
    assert is_path(g, (0, 1, 2))
    assert is_path(g, (3,))
    assert not is_path(g, ())
    assert not is_path(g, (0, 2))
    assert not is_path(g, (0, 1, 0))
    assert not is_path(g, (0, 9))
    assert not is_xy_path(g, (0, 1, 2), {0, 1}, {2})


def test_induced_subgraph():
    h, old = induced_subgraph(path_graph(5), [1, 2, 4])
    assert old == [1, 2, 4]
    assert h.edges == ((0, 1),)


# --- powers --------------------------------------------------------------------------


def test_power_graph_examples():
    g = path_graph(4)
    assert power_graph(g, 1) is g
    assert set(power_graph(g, 2).edges) == set(g.edges) | {(0, 2), (1, 3)}
    assert power_graph(g, 3).edge_count == 6
    with pytest.raises(ValueError):
        power_graph(g, 0)


@given(graphs(max_n=12), st.integers(1, 4))
def test_power_distance_is_ceiling(g, d):
    base = scipy_distances(g)
    pw = scipy_distances(power_graph(g, d))
    for u in g.vertices():
        for v in g.vertices():
            if math.isinf(base[u, v]):
                assert math.isinf(pw[u, v])
            else:
                assert pw[u, v] == math.ceil(base[u, v] / d)


def test_lift_examples():
    g = path_graph(7)
    assert lift_power_paths(g, 1, [(0, 1, 2)]) == [(0, 1, 2)]
    assert lift_power_paths(g, 3, [(0, 3)]) == [(0, 1, 2, 3)]
    assert lift_power_paths(g, 3, [(0, 3, 6)]) == [tuple(range(7))]
    with pytest.raises(ValueError):
        lift_power_paths(g, 2, [(0, 3)])
    with pytest.raises(ValueError):
        lift_power_paths(g, 2, [(0, 1, 0)])


@given(graphs(min_n=2, max_n=12), st.integers(1, 3), st.data())
def test_lift_keeps_ends_and_stays_a_path(g, d, data):
    h = power_graph(g, d)
    u = data.draw(st.integers(0, g.vertex_count - 1))
    reach = sorted(nx.node_connected_component(to_nx(h), u))
    v = data.draw(st.sampled_from(reach))
    walk = nx.shortest_path(to_nx(h), u, v)
    (lifted,) = lift_power_paths(g, d, [walk])
    assert is_path(g, lifted)
    assert lifted[0] == u and lifted[-1] == v


# --- subdivision ------------------------------------------------------------------------


def test_subdivide_examples():
    g = Graph(2, [(0, 1)])
    assert subdivide(g, 0) is g
    s = subdivide(g, 3)
    assert s.vertex_count == 5 and s.edges == ((0, 2), (1, 4), (2, 3), (3, 4))
    tri = subdivide(Graph(3, [(0, 1), (1, 2), (0, 2)]), 1)
    assert tri.vertex_count == 6
    assert nx.is_isomorphic(to_nx(tri), nx.cycle_graph(6))
    with pytest.raises(ValueError):
        subdivide(g, -1)


@given(graphs(max_n=8), st.integers(0, 3))
def test_subdivide_scales_distances(g, k):
    s = subdivide(g, k)
    assert s.vertex_count == g.vertex_count + k * g.edge_count
    assert s.edge_count == (k + 1) * g.edge_count
    base = scipy_distances(g)
    sub = scipy_distances(s)
    for u in g.vertices():
        for v in g.vertices():
            assert sub[u, v] == (k + 1) * base[u, v]
