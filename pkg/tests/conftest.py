from __future__ import annotations

import sys
from pathlib import Path

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from distantpaths.graph_core import Graph

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", deadline=None, max_examples=150, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


@st.composite
def graphs_with_terminals(draw, min_n: int = 1, max_n: int = 10):
    g = draw(graphs(min_n, max_n))
    ids = st.integers(0, g.vertex_count - 1)
    x = draw(st.frozensets(ids, max_size=3))
    y = draw(st.frozensets(ids, max_size=3))
    return g, x, y


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def all_xy_paths(g: Graph, x, y):
    """Every X-Y path, by depth-first enumeration (tiny graphs only)."""
    x, y = set(x), set(y)
    out = []
    for s in sorted(x):
        if s in y:
            out.append((s,))
            continue
        stack = [(s, (s,))]
        while stack:
            u, path = stack.pop()
            for w in g.adjacency[u]:
                if w in path:
                    continue
                if w in y:
                    out.append(path + (w,))
                elif w not in x:
                    stack.append((w, path + (w,)))
    return out


def has_xy_path_avoiding(g: Graph, x, y, removed) -> bool:
    """Independent route via networkx: an X-Y path in G - removed exists iff
    some x reaches some y through non-terminal vertices."""
    h = to_nx(g)
    removed = set(removed)
    x = set(x) - removed
    y = set(y) - removed
    if x & y:
        return True
    inner = [v for v in h if v not in removed and v not in x and v not in y]
    core = h.subgraph(inner)
    comp_of = {}
    for i, comp in enumerate(nx.connected_components(core)):
        for v in comp:
            comp_of[v] = i
    for a in x:
        for b in y:
            if h.has_edge(a, b):
                return True
        touch_a = {comp_of[w] for w in h[a] if w in comp_of}
        for b in y:
            if touch_a & {comp_of[w] for w in h[b] if w in comp_of}:
                return True
    return False
