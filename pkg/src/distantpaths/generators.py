"""Instance builders: the lower-bound family, grids and seeded random graphs."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph_core import Graph, subdivide

FIG1_ROWS = 3
FIG1_COLS = 7


@dataclass(frozen=True)
class Instance:
    graph: Graph
    x: frozenset[int]
    y: frozenset[int]
    d: int = 2
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "x", self.graph.check_vertices(self.x))
        object.__setattr__(self, "y", self.graph.check_vertices(self.y))
        if self.d < 1:
            raise ValueError("d must be positive")


def _grid_id(row: int, col: int, cols: int) -> int:
    return row * cols + col


def figure1_base() -> tuple[Graph, frozenset[int], frozenset[int]]:
    """The 25-vertex, 41-edge graph with no two anti-complete X-Y paths and no
    radius-one ball meeting every X-Y path.

    Vertices 0..20 are the 3 x 7 grid in row-major order; 21..24 are the
    extra vertices splitting the vertical edges of the first and last
    column (column 1 top, column 1 bottom, column 7 top, column 7 bottom).
    """
    rows, cols = FIG1_ROWS, FIG1_COLS
    edges = []
    for r in range(rows):
        for c in range(cols - 1):
            edges.append((_grid_id(r, c, cols), _grid_id(r, c + 1, cols)))
    extra = rows * cols
    for c in range(cols):
        for r in range(rows - 1):
            top, bottom = _grid_id(r, c, cols), _grid_id(r + 1, c, cols)
            if c in (0, cols - 1):
                edges += [(top, extra), (extra, bottom)]
                extra += 1
            else:
                edges.append((top, bottom))
    for c in range(cols - 2):
        edges.append((_grid_id(0, c, cols), _grid_id(2, c + 2, cols)))
    g = Graph(extra, edges)
    x = frozenset(_grid_id(r, 0, cols) for r in range(rows))
    y = frozenset(_grid_id(r, cols - 1, cols) for r in range(rows))
    return g, x, y


def figure1_instance(d: int) -> Instance:
    """Lower-bound instance for distance ``d``: the base graph with every edge
    subdivided ``d - 2`` times."""
    if d < 2:
        raise ValueError("figure1_instance needs d >= 2")
    g, x, y = figure1_base()
    return Instance(subdivide(g, d - 2), x, y, d, label=f"figure1-d{d}")


def grid_instance(rows: int, cols: int, d: int = 2) -> Instance:
    """rows x cols grid; X is the left column and Y the right column."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = _grid_id(r, c, cols)
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    x = frozenset(_grid_id(r, 0, cols) for r in range(rows))
    y = frozenset(_grid_id(r, cols - 1, cols) for r in range(rows))
    return Instance(Graph(rows * cols, edges), x, y, d, label=f"grid-{rows}x{cols}")


def random_instance(
    n: int,
    edge_probability: float,
    x_size: int,
    y_size: int,
    seed: int,
    d: int = 2,
) -> Instance:
    """G(n, p) graph with disjoint random terminal sets, reproducible by seed."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    if n < 1 or x_size < 0 or y_size < 0 or x_size + y_size > n:
        raise ValueError("terminal sets do not fit in the vertex set")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < edge_probability
    edges = list(zip(iu[keep].tolist(), ju[keep].tolist()))
    perm = rng.permutation(n).tolist()
    x = frozenset(perm[:x_size])
    y = frozenset(perm[x_size : x_size + y_size])
    label = f"random-n{n}-p{edge_probability:g}-s{seed}"
    return Instance(Graph(n, edges), x, y, d, label=label)


GRID_SIDES = (1, 2, 3, 5, 8, 13, 20)
RANDOM_DISTANCES = (1, 2, 3, 5)


def default_corpus(random_count: int = 500, seed: int = 0) -> list[Instance]:
    """The standard soundness corpus: the lower-bound family for d = 2, 3, 4,
    grids up to 20 x 20, and seeded sparse random graphs with n <= 200."""
    out = [figure1_instance(d) for d in (2, 3, 4)]
    for rows in GRID_SIDES:
        for cols in GRID_SIDES:
            d = 1 + (rows + cols) % 3
            out.append(grid_instance(rows, cols, d))
    rng = np.random.default_rng(seed)
    for i in range(random_count):
        n = int(rng.integers(2, 201))
        mean_degree = float(rng.uniform(0.8, 5.0))
        p = min(1.0, mean_degree / max(n - 1, 1))
        xs = int(rng.integers(1, min(5, n - 1) + 1))
        ys = int(rng.integers(1, min(5, n - xs) + 1))
        d = RANDOM_DISTANCES[i % len(RANDOM_DISTANCES)]
        out.append(random_instance(n, round(p, 6), xs, ys, seed=int(rng.integers(2**31)), d=d))
    return out
