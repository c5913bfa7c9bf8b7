import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import to_nx
from distantpaths.certificates import verify_paths
from distantpaths.generators import (
    Instance,
    default_corpus,
    figure1_base,
    figure1_instance,
    grid_instance,
    random_instance,
)
from distantpaths.graph_core import Graph, distance, shortest_xy_path


def test_figure1_counts():
    inst = figure1_instance(2)
    assert inst.graph.vertex_count == 25
    assert inst.graph.edge_count == 41
    assert inst.x == {0, 7, 14} and inst.y == {6, 13, 20}
    with pytest.raises(ValueError):
        figure1_instance(1)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 7])
def test_figure1_closed_forms(d):
    inst = figure1_instance(d)
    assert inst.graph.vertex_count == 25 + 41 * (d - 2)
    assert inst.graph.edge_count == 41 * (d - 1)
    assert inst.d == d


def test_figure1_subdivides_the_base():
    g2 = figure1_instance(2).graph
    g3 = figure1_instance(3).graph
    for u, v in g2.edges:
        assert distance(g3, u, v) == 2
    ref = nx.Graph()
    for u, v in g2.edges:
        ref.add_edges_from([(u, ("mid", u, v)), (("mid", u, v), v)])
    assert nx.is_isomorphic(to_nx(g3), ref)


def test_figure1_dots_separate_the_x_column():
    g, x, y = figure1_base()
    assert distance(g, 0, 7) == 2 and distance(g, 7, 14) == 2
    assert distance(g, 6, 13) == 2 and distance(g, 13, 20) == 2


def test_grid_vs_figure1_diff():
    grid = set(grid_instance(3, 7).graph.edges)
    g, _, _ = figure1_base()
    fig = set(g.edges)
    end_verticals = {(0, 7), (7, 14), (6, 13), (13, 20)}
    diagonals = {(c, 14 + c + 2) for c in range(5)}
    dot_edges = {e for e in fig if max(e) >= 21}
    assert grid - fig == end_verticals
    assert fig - grid == diagonals | dot_edges
    assert len(dot_edges) == 8


def test_rows_one_and_three_are_disjoint():
    inst = figure1_instance(2)
    assert verify_paths(inst.graph, inst.x, inst.y, 1, tuple(range(0, 7)), tuple(range(14, 21)))
    assert not verify_paths(inst.graph, inst.x, inst.y, 2, tuple(range(0, 7)), tuple(range(14, 21)))


def test_grid_examples():
    line = grid_instance(1, 6)
    assert line.graph.edge_count == 5
    assert shortest_xy_path(line.graph, line.x, line.y) == tuple(range(6))
    sq = grid_instance(2, 2)
    assert nx.is_isomorphic(to_nx(sq.graph), nx.cycle_graph(4))
    assert verify_paths(sq.graph, sq.x, sq.y, 1, (0, 1), (2, 3))
    with pytest.raises(ValueError):
        grid_instance(0, 3)


def test_random_examples():
    empty = random_instance(10, 0.0, 3, 3, seed=1)
    assert empty.graph.edge_count == 0
    assert not empty.x & empty.y
    assert shortest_xy_path(empty.graph, empty.x, empty.y) is None
    full = random_instance(6, 1.0, 2, 2, seed=1)
    assert full.graph.edge_count == 15
    assert len(shortest_xy_path(full.graph, full.x, full.y)) == 2
    with pytest.raises(ValueError):
        random_instance(3, 0.5, 2, 2, seed=0)
    with pytest.raises(ValueError):
        random_instance(3, 1.5, 1, 1, seed=0)


@given(st.integers(1, 40), st.floats(0, 1), st.integers(0, 2**31))
def test_random_is_deterministic(n, p, seed):
    xs = min(2, n)
    ys = min(2, n - xs)
    a = random_instance(n, p, xs, ys, seed)
    b = random_instance(n, p, xs, ys, seed)
    assert a == b
    assert len(a.x) == xs and len(a.y) == ys and not a.x & a.y


def test_instance_validates():
    with pytest.raises(ValueError):
        Instance(Graph(2), frozenset({5}), frozenset())
    with pytest.raises(ValueError):
        Instance(Graph(2), frozenset(), frozenset(), d=0)


def test_default_corpus_shape():
    corpus = default_corpus()
    labels = [inst.label for inst in corpus]
    assert labels[:3] == ["figure1-d2", "figure1-d3", "figure1-d4"]
    assert "grid-20x20" in labels
    randoms = [inst for inst in corpus if inst.label.startswith("random")]
    assert len(randoms) == 500
    assert max(inst.graph.vertex_count for inst in randoms) <= 200
    assert {inst.d for inst in randoms} == {1, 2, 3, 5}
    assert default_corpus() == corpus
