"""Certificates for the distant-paths / hitting-ball dichotomy and their checkers.

Also hosts the ``d = 1`` base case: two vertex-disjoint X-Y paths or a single
vertex meeting every X-Y path, found with two rounds of augmenting paths on
the usual split-vertex flow network.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from collections.abc import Iterable

from .graph_core import (
    Graph,
    Path,
    ball,
    is_path,
    loop_erase,
    shortest_xy_path,
    subgraph_distance,
    trim_to_xy,
)


@dataclass(frozen=True)
class DistantPaths:
    p1: Path
    p2: Path

    kind = "paths"


@dataclass(frozen=True)
class HittingBall:
    center: int
    radius: int

    kind = "ball"


Certificate = DistantPaths | HittingBall


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def _xy_problem(g: Graph, p, x, y, name: str) -> str | None:
    if not is_path(g, p):
        return f"{name} is not a path of the graph"
    if p[0] not in x:
        return f"{name} does not start in X"
    if p[-1] not in y:
        return f"{name} does not end in Y"
    for v in p[1:-1]:
        if v in x or v in y:
            return f"{name} has interior terminal vertex {v}"
    return None


def verify_paths(g: Graph, x: Iterable[int], y: Iterable[int], d: int, p1, p2) -> Verdict:
    """Check that ``p1`` and ``p2`` are disjoint X-Y paths at distance >= d."""
    x, y = set(x), set(y)
    p1, p2 = tuple(p1), tuple(p2)
    for p, name in ((p1, "p1"), (p2, "p2")):
        problem = _xy_problem(g, p, x, y, name)
        if problem:
            return Verdict(False, problem)
    if set(p1) & set(p2):
        return Verdict(False, "paths share a vertex")
    dist = subgraph_distance(g, p1, p2)
    if dist < d:
        return Verdict(False, f"paths are at distance {dist} < {d}")
    return Verdict(True)


def verify_ball(g: Graph, x: Iterable[int], y: Iterable[int], center: int, radius: int) -> Verdict:
    """Check that the ball around ``center`` meets every X-Y path."""
    g.check_vertex(center)
    if radius < 0:
        return Verdict(False, "negative radius")
    removed = ball(g, [center], radius)
    rest = frozenset(v for v in g.vertices() if v not in removed)
    path = shortest_xy_path(g, set(x) - removed, set(y) - removed, allowed=rest)
    if path is not None:
        return Verdict(False, f"X-Y path {list(path)} avoids the ball")
    return Verdict(True)


def verify_certificate(g: Graph, x, y, d: int, cert: Certificate, *, radius: int | None = None) -> Verdict:
    if isinstance(cert, DistantPaths):
        return verify_paths(g, x, y, d, cert.p1, cert.p2)
    if radius is not None and cert.radius != radius:
        return Verdict(False, f"ball radius {cert.radius} differs from the required {radius}")
    return verify_ball(g, x, y, cert.center, cert.radius)


# ---------------------------------------------------------------------------
# d = 1


class _SplitNetwork:
    """Unit vertex capacities via in/out copies: ``v_in = 2v``, ``v_out = 2v+1``;
    the super source is ``2n`` and the super sink ``2n+1``."""

    def __init__(self, g: Graph, x, y):
        n = g.vertex_count
        self.n = n
        self.source, self.sink = 2 * n, 2 * n + 1
        self.cap: dict[tuple[int, int], int] = {}
        self.out: list[list[int]] = [[] for _ in range(2 * n + 2)]
        big = 2
        for v in g.vertices():
            self._arc(2 * v, 2 * v + 1, 1)
        for u, v in g.edges:
            self._arc(2 * u + 1, 2 * v, big)
            self._arc(2 * v + 1, 2 * u, big)
        for v in sorted(x):
            self._arc(self.source, 2 * v, big)
        for v in sorted(y):
            self._arc(2 * v + 1, self.sink, big)
        for lst in self.out:
            lst.sort()

    def _arc(self, u, v, c):
        if (u, v) not in self.cap:
            self.out[u].append(v)
            if (v, u) not in self.cap:
                self.out[v].append(u)
                self.cap[(v, u)] = 0
        self.cap[(u, v)] = self.cap.get((u, v), 0) + c

    def augment(self) -> bool:
        parent = {self.source: None}
        queue = deque([self.source])
        while queue and self.sink not in parent:
            u = queue.popleft()
            for w in self.out[u]:
                if w not in parent and self.cap[(u, w)] > 0:
                    parent[w] = u
                    queue.append(w)
        if self.sink not in parent:
            return False
        v = self.sink
        while parent[v] is not None:
            u = parent[v]
            self.cap[(u, v)] -= 1
            self.cap[(v, u)] += 1
            v = u
        return True

    def residual_reach(self) -> set[int]:
        seen = {self.source}
        stack = [self.source]
        while stack:
            u = stack.pop()
            for w in self.out[u]:
                if w not in seen and self.cap[(u, w)] > 0:
                    seen.add(w)
                    stack.append(w)
        return seen

    def flow_paths(self, original_cap) -> list[list[int]]:
        """Decompose the current flow into source-sink vertex sequences."""
        flow = {
            arc: original_cap[arc] - self.cap[arc]
            for arc in original_cap
            if original_cap[arc] - self.cap[arc] > 0
        }
        paths = []
        while True:
            u = self.source
            seq = []
            while u != self.sink:
                nxt = next((w for w in self.out[u] if flow.get((u, w), 0) > 0), None)
                if nxt is None:
                    return paths
                flow[(u, nxt)] -= 1
                if u < 2 * self.n and u % 2 == 0:
                    seq.append(u // 2)
                u = nxt
            paths.append(seq)


def menger_two_paths(g: Graph, x: Iterable[int], y: Iterable[int]) -> tuple[Path, Path] | int:
    """Two vertex-disjoint X-Y paths, or one vertex meeting every X-Y path.

    With no X-Y path at all the returned vertex is 0 (any vertex works).
    """
    x = g.check_vertices(x)
    y = g.check_vertices(y)
    if g.vertex_count == 0:
        raise ValueError("empty graph")
    if not x or not y:
        return 0
    net = _SplitNetwork(g, x, y)
    original = dict(net.cap)
    value = 0
    while value < 2 and net.augment():
        value += 1
    if value == 2:
        walks = net.flow_paths(original)
        p1, p2 = (trim_to_xy(loop_erase(w), x, y) for w in walks[:2])
        return p1, p2
    if value == 0:
        return 0
    reach = net.residual_reach()
    cut = [v for v in g.vertices() if 2 * v in reach and 2 * v + 1 not in reach]
    return min(cut)
