"""Immutable simple graphs and the breadth-first primitives built on them.

Vertices are the integers ``0 .. n-1``.  Paths are plain tuples of vertex ids.
Every search visits vertices in increasing id order, so results are
reproducible run to run.
"""
from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Sequence

Path = tuple[int, ...]

#: Distance between vertices in different components.
INF = math.inf


class Graph:
    """Finite simple undirected graph on vertices ``0 .. vertex_count-1``."""

    __slots__ = ("vertex_count", "edges", "adjacency", "_edge_set")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) has a vertex outside 0..{vertex_count - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            normalized.add((u, v) if u < v else (v, u))
        neighbours: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in normalized:
            neighbours[u].append(v)
            neighbours[v].append(u)
        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(normalized))
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(nb)) for nb in neighbours)
        self._edge_set = frozenset(normalized)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.vertex_count):
            raise ValueError(f"invalid vertex id {v!r} for a graph on {self.vertex_count} vertices")

    def check_vertices(self, vs: Iterable[int]) -> frozenset[int]:
        out = frozenset(vs)
        for v in out:
            self.check_vertex(v)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


# ---------------------------------------------------------------------------
# breadth-first search helpers


def bfs_layers(
    g: Graph,
    sources: Iterable[int],
    *,
    allowed: frozenset[int] | set[int] | None = None,
    limit: float = INF,
) -> dict[int, int]:
    """Distances from the source set to every vertex reachable within ``limit``.

    When ``allowed`` is given the search runs inside the induced subgraph on
    that vertex set (sources outside it are ignored).
    """
    dist: dict[int, int] = {}
    queue: deque[int] = deque()
    for s in sorted(set(sources)):
        if allowed is not None and s not in allowed:
            continue
        dist[s] = 0
        queue.append(s)
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du >= limit:
            continue
        for w in adj[u]:
            if w in dist or (allowed is not None and w not in allowed):
                continue
            dist[w] = du + 1
            queue.append(w)
    return dist


def _bfs_tree(g: Graph, sources: Iterable[int], allowed=None, stop=None):
    """BFS returning ``(dist, parent, hit)`` where ``hit`` is the first vertex of
    ``stop`` reached (lowest id among the nearest ones), or None."""
    dist: dict[int, int] = {}
    parent: dict[int, int] = {}
    frontier = []
    for s in sorted(set(sources)):
        if allowed is not None and s not in allowed:
            continue
        dist[s] = 0
        frontier.append(s)
    adj = g.adjacency
    while frontier:
        if stop is not None:
            hits = [v for v in frontier if v in stop]
            if hits:
                return dist, parent, min(hits)
        nxt = []
        for u in frontier:
            du = dist[u]
            for w in adj[u]:
                if w in dist or (allowed is not None and w not in allowed):
                    continue
                dist[w] = du + 1
                parent[w] = u
                nxt.append(w)
        frontier = nxt
    return dist, parent, None


def _trace(parent: dict[int, int], v: int) -> list[int]:
    out = [v]
    while v in parent:
        v = parent[v]
        out.append(v)
    out.reverse()
    return out


def shortest_path_between(
    g: Graph,
    sources: Iterable[int],
    targets: Iterable[int],
    *,
    allowed: frozenset[int] | set[int] | None = None,
) -> Path | None:
    """A shortest path from the source set to the target set, or None.

    The path starts in ``sources`` and ends at the nearest target (lowest id
    on ties).  It is not trimmed: interior vertices may lie in either set only
    if that does not shorten it, which BFS already rules out.
    """
    targets = set(targets)
    if allowed is not None:
        targets &= set(allowed)
    if not targets:
        return None
    _, parent, hit = _bfs_tree(g, sources, allowed, targets)
    if hit is None:
        return None
    return tuple(_trace(parent, hit))


# ---------------------------------------------------------------------------
# the operations other modules consume


def distance(g: Graph, u: int, v: int) -> int | float:
    g.check_vertex(u)
    g.check_vertex(v)
    dist, _, hit = _bfs_tree(g, [u], stop={v})
    return INF if hit is None else dist[hit]


def eccentricity(g: Graph, v: int) -> int:
    """Largest finite distance from ``v`` (unreachable vertices are ignored)."""
    g.check_vertex(v)
    return max(bfs_layers(g, [v]).values())


def all_pairs_distances(g: Graph) -> list[dict[int, int]]:
    return [bfs_layers(g, [v]) for v in g.vertices()]


def ball(g: Graph, seeds: Iterable[int], r: int) -> frozenset[int]:
    """All vertices at distance at most ``r`` from some seed."""
    seeds = g.check_vertices(seeds)
    if not seeds:
        raise ValueError("ball needs a nonempty seed set")
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return frozenset(bfs_layers(g, seeds, limit=r))


def components_avoiding(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``g - removed``, ordered by smallest vertex."""
    removed = set(removed)
    seen = set(removed)
    out = []
    for v in g.vertices():
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def subgraph_distance(g: Graph, s1: Iterable[int], s2: Iterable[int]) -> int | float:
    """Minimum distance between a vertex of ``s1`` and a vertex of ``s2``."""
    s1 = g.check_vertices(s1)
    s2 = g.check_vertices(s2)
    if not s1 or not s2:
        raise ValueError("subgraph_distance needs two nonempty vertex sets")
    dist, _, hit = _bfs_tree(g, s1, stop=s2)
    return INF if hit is None else dist[hit]


def anti_complete(g: Graph, s1: Iterable[int], s2: Iterable[int]) -> bool:
    """True iff the sets are disjoint and no edge joins them."""
    return subgraph_distance(g, s1, s2) >= 2


def shortest_xy_path(
    g: Graph,
    x: Iterable[int],
    y: Iterable[int],
    *,
    allowed: frozenset[int] | set[int] | None = None,
) -> Path | None:
    """A minimum-length X-Y path, or None when there is none.

    An X-Y path starts in X, ends in Y and has no interior vertex in X or Y;
    a vertex of X and Y on its own is such a path.  ``allowed`` restricts the
    search to an induced subgraph (terminals outside it are dropped).
    """
    x = set(x)
    y = set(y)
    if allowed is not None:
        x &= set(allowed)
        y &= set(allowed)
    if not x or not y:
        return None
    walk = shortest_path_between(g, x, y, allowed=allowed)
    if walk is None:
        return None
    return trim_to_xy(walk, x, y)


def trim_to_xy(walk: Sequence[int], x, y) -> Path:
    """Cut a path that starts in X and ends in Y down to an X-Y path.

    Keeps the part between the last X vertex and the first Y vertex after it.
    """
    start = max(i for i, v in enumerate(walk) if v in x)
    end = next(i for i in range(start, len(walk)) if walk[i] in y)
    return tuple(walk[start : end + 1])


def loop_erase(walk: Sequence[int]) -> list[int]:
    """Chronological loop erasure: a path with the walk's ends, using only
    vertices (and edges) of the walk."""
    out: list[int] = []
    pos: dict[int, int] = {}
    for v in walk:
        if v in pos:
            cut = pos[v]
            for u in out[cut + 1 :]:
                del pos[u]
            del out[cut + 1 :]
        else:
            pos[v] = len(out)
            out.append(v)
    return out


def is_path(g: Graph, vertices: Sequence[int]) -> bool:
    if not vertices:
        return False
    if any(not (isinstance(v, int) and 0 <= v < g.vertex_count) for v in vertices):
        return False
    if len(set(vertices)) != len(vertices):
        return False
    return all(g.has_edge(a, b) for a, b in zip(vertices, vertices[1:]))


def is_xy_path(g: Graph, vertices: Sequence[int], x, y) -> bool:
    if not is_path(g, vertices):
        return False
    if vertices[0] not in x or vertices[-1] not in y:
        return False
    return not any(v in x or v in y for v in vertices[1:-1])


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Relabelled induced subgraph plus the list mapping new ids to old ones."""
    old = sorted(set(keep))
    new_id = {v: i for i, v in enumerate(old)}
    edges = [(new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id]
    return Graph(len(old), edges), old


# ---------------------------------------------------------------------------
# power graphs and subdivisions


def power_graph(g: Graph, d: int) -> Graph:
    """Same vertices; ``u ~ v`` iff ``1 <= dist_g(u, v) <= d``."""
    if d < 1:
        raise ValueError("power must be at least 1")
    if d == 1:
        return g
    edges = []
    for u in g.vertices():
        for v, dv in bfs_layers(g, [u], limit=d).items():
            if v > u:
                edges.append((u, v))
    return Graph(g.vertex_count, edges)


def lift_power_paths(g: Graph, d: int, paths_in_power: Sequence[Sequence[int]]) -> list[Path]:
    """Turn paths of the d-th power back into paths of ``g`` with the same ends.

    Each hop ``v_i v_{i+1}`` is replaced by a shortest connector of length at
    most ``d``; the concatenation is loop-erased.
    """
    if d < 1:
        raise ValueError("power must be at least 1")
    lifted = []
    for path in paths_in_power:
        path = tuple(path)
        if not path or len(set(path)) != len(path):
            raise ValueError(f"{path!r} is not a path")
        for v in path:
            g.check_vertex(v)
        walk = [path[0]]
        for u, w in zip(path, path[1:]):
            hop = shortest_path_between(g, [u], [w])
            if hop is None or len(hop) - 1 > d:
                raise ValueError(f"({u}, {w}) is not an edge of the power-{d} graph")
            walk.extend(hop[1:])
        lifted.append(tuple(loop_erase(walk)))
    return lifted


def subdivide(g: Graph, k: int) -> Graph:
    """Replace every edge by a path with ``k`` new interior vertices.

    Original ids are kept; new ids follow in edge order, then position along
    the edge (from the smaller endpoint).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return g
    n = g.vertex_count
    edges = []
    for u, v in g.edges:
        chain = [u, *range(n, n + k), v]
        n += k
        edges.extend(zip(chain, chain[1:]))
    return Graph(n, edges)
