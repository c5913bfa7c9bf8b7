import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, graphs_with_terminals
from distantpaths.certificates import DistantPaths, HittingBall
from distantpaths.formats import (
    FormatError,
    emit_certificate,
    emit_dot,
    emit_graph,
    emit_terminals,
    instance_digest,
    parse_certificate,
    parse_graph,
    parse_terminals,
)
from distantpaths.graph_core import Graph


def test_parse_graph_example():
    g = parse_graph("# a triangle\n3 3\n0 1\n1 2  # closing edge next\n2 0\n")
    assert g.vertex_count == 3 and g.edge_count == 3
    assert parse_graph("0 0\n").vertex_count == 0


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "empty"),
        ("3 1\n0 3\n", "out of range"),
        ("3 1\n1 1\n", "self-loop"),
        ("3 2\n0 1\n1 0\n", "duplicate"),
        ("3 2\n0 1\n", "promises"),
        ("3 1\n0 x\n", "not an integer"),
        ("3 1\n0 1 2\n", "expected 2"),
        ("-1 0\n", "nonnegative"),
    ],
)
def test_parse_graph_rejects(text, fragment):
    with pytest.raises(FormatError, match=fragment):
        parse_graph(text)


@given(graphs(0, 15))
def test_graph_round_trip(g):
    back = parse_graph(emit_graph(g))
    assert back.vertex_count == g.vertex_count
    assert set(back.edges) == set(g.edges)


@given(st.frozensets(st.integers(0, 500)))
def test_terminal_round_trip(vs):
    assert parse_terminals(emit_terminals(vs)) == vs


def test_terminal_separators():
    assert parse_terminals("1, 2 3\n4,5 # comment 6\n") == {1, 2, 3, 4, 5}
    with pytest.raises(FormatError):
        parse_terminals("1, two")


@given(
    st.one_of(
        st.builds(DistantPaths, st.lists(st.integers(0, 99)).map(tuple), st.lists(st.integers(0, 99)).map(tuple)),
        st.builds(HittingBall, st.integers(0, 99), st.integers(0, 10**6)),
    ),
    st.one_of(st.none(), st.text("0123456789abcdef", min_size=64, max_size=64)),
)
def test_certificate_round_trip(cert, digest):
    text = emit_certificate(cert, digest)
    assert text.count("\n") == 1
    assert parse_certificate(text) == (cert, digest)


@pytest.mark.parametrize(
    "doc",
    [
        "not json",
        "[1, 2]",
        '{"type": "tree"}',
        '{"type": "ball", "center": 1}',
        '{"type": "ball", "center": 1, "radius": true}',
        '{"type": "ball", "center": 1, "radius": 2, "colour": "red"}',
        '{"type": "paths", "p1": [0, 1], "p2": "2"}',
        '{"type": "paths", "p1": [0, 1.5], "p2": [2]}',
        '{"type": "ball", "center": 1, "radius": 2, "digest": 7}',
    ],
)
def test_parse_certificate_rejects(doc):
    with pytest.raises(FormatError):
        parse_certificate(doc)


@given(graphs_with_terminals(max_n=8), st.integers(1, 4))
def test_digest_separates_instances(case, d):
    g, x, y = case
    base = instance_digest(g, x, y, d)
    assert base == instance_digest(g, set(x), set(y), d)
    assert base != instance_digest(g, x, y, d + 1)
    if x != y:
        assert base != instance_digest(g, y, x, d)


def test_dot_output():
    g = Graph(3, [(0, 1), (1, 2)])
    dot = emit_dot(g, {0}, {2}, DistantPaths((0, 1, 2), (2,)))
    assert dot.startswith("graph G {") and dot.rstrip().endswith("}")
    assert "0 [shape=box, color=blue]" in dot
    assert "0 -- 1 [color=blue]" in dot
    assert "orange" in emit_dot(g, {0}, {2}, HittingBall(1, 0))
    json.dumps(dot)
