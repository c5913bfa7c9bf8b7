"""Exponential-time ground truth for small instances.

Deciding whether two disjoint anti-complete X-Y paths exist is NP-complete,
so these solvers are meant for a few dozen vertices.  They report running out
of budget as a separate outcome instead of guessing.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from .certificates import verify_ball
from .graph_core import Graph, Path, bfs_layers, shortest_xy_path


class Outcome(str, enum.Enum):
    FOUND = "found"
    ABSENT = "absent"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 400
    time_budget: float = 60.0


@dataclass(frozen=True)
class OracleResult:
    outcome: Outcome
    paths: tuple[Path, ...] | None = None
    nodes: int = 0
    elapsed: float = 0.0


class _OutOfBudget(Exception):
    pass


class _PathSearch:
    def __init__(self, g: Graph, x, y, d: int, k: int, budget: OracleBudget):
        self.g = g
        self.x = frozenset(x)
        self.y = frozenset(y)
        self.k = k
        self.deadline = time.monotonic() + budget.time_budget
        self.nodes = 0
        # block[v] counts chosen path vertices within d - 1 of v.
        self.block = [0] * g.vertex_count
        self._balls = {}
        self.d = d

    def ball(self, v: int) -> tuple[int, ...]:
        b = self._balls.get(v)
        if b is None:
            b = tuple(bfs_layers(self.g, [v], limit=self.d - 1))
            self._balls[v] = b
        return b

    def _tick(self):
        self.nodes += 1
        if self.nodes & 255 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget

    def _mark(self, v: int, delta: int):
        for u in self.ball(v):
            self.block[u] += delta

    def _free(self, v: int) -> bool:
        return self.block[v] == 0

    def _xy_exists(self, after: int, extra: set[int] | None = None) -> Path | None:
        """An X-Y path avoiding blocked vertices (and ``extra``) whose X end
        exceeds ``after``."""
        extra = extra or set()
        allowed = frozenset(v for v in self.g.vertices() if self.block[v] == 0 and v not in extra)
        xs = {v for v in self.x if v > after}
        return shortest_xy_path(self.g, xs, self.y, allowed=allowed)

    def _can_finish(self, path: list[int], on_path: set[int]) -> bool:
        end = path[-1]
        seen = {end}
        stack = [end]
        adj = self.g.adjacency
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in seen or w in on_path or self.block[w]:
                    continue
                if w in self.y:
                    return True
                if w in self.x:
                    continue
                seen.add(w)
                stack.append(w)
        return False

    def run(self) -> tuple[Path, ...] | None:
        return self._place(0, -1)

    def _place(self, idx: int, after: int):
        if idx == self.k - 1:
            p = self._xy_exists(after)
            return None if p is None else (p,)
        for start in sorted(self.x):
            if start <= after or not self._free(start):
                continue
            found = self._extend([start], {start}, idx)
            if found is not None:
                return found
        return None

    def _extend(self, path: list[int], on_path: set[int], idx: int):
        self._tick()
        end = path[-1]
        complete = end in self.y
        if not complete and not self._can_finish(path, on_path):
            return None
        for v in path:
            self._mark(v, 1)
        try:
            if self._xy_exists(path[0]) is None:
                return None
            if complete:
                rest = self._place(idx + 1, path[0])
                return None if rest is None else (tuple(path), *rest)
        finally:
            for v in path:
                self._mark(v, -1)
        for w in self.g.adjacency[end]:
            if w in on_path or not self._free(w):
                continue
            if w in self.x and w not in self.y:
                continue
            path.append(w)
            on_path.add(w)
            found = self._extend(path, on_path, idx)
            path.pop()
            on_path.discard(w)
            if found is not None:
                return found
        return None


def exact_distant_paths(
    g: Graph,
    x,
    y,
    d: int,
    k: int = 2,
    budget: OracleBudget | None = None,
) -> OracleResult:
    """Search for ``k`` disjoint X-Y paths pairwise at distance at least ``d``.

    Paths are placed one at a time in increasing order of their X end; the
    vertices within ``d - 1`` of placed paths are blocked.  A partial path is
    abandoned once it cannot reach Y or once the blocked region leaves no X-Y
    path for the paths still to be placed.
    """
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    budget = budget or OracleBudget()
    t0 = time.monotonic()
    if g.vertex_count > budget.max_vertices:
        return OracleResult(Outcome.BUDGET_EXCEEDED)
    search = _PathSearch(g, g.check_vertices(x), g.check_vertices(y), d, k, budget)
    try:
        paths = search.run()
    except _OutOfBudget:
        return OracleResult(Outcome.BUDGET_EXCEEDED, None, search.nodes, time.monotonic() - t0)
    outcome = Outcome.ABSENT if paths is None else Outcome.FOUND
    return OracleResult(outcome, paths, search.nodes, time.monotonic() - t0)


def _some_center_hits(g: Graph, x, y, radius: int) -> int | None:
    for z in g.vertices():
        if verify_ball(g, x, y, z, radius):
            return z
    return None


def min_hitting_ball(g: Graph, x, y) -> tuple[int, int] | None:
    """Smallest radius (then lowest center) whose ball meets every X-Y path.

    None when there is no X-Y path, or when X-Y paths live in two different
    components so that no single ball can meet them all.
    """
    x = g.check_vertices(x)
    y = g.check_vertices(y)
    if shortest_xy_path(g, x, y) is None:
        return None
    hi = g.vertex_count
    if _some_center_hits(g, x, y, hi) is None:
        return None
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if _some_center_hits(g, x, y, mid) is not None:
            hi = mid
        else:
            lo = mid + 1
    return _some_center_hits(g, x, y, lo), lo
