"""
The lower-bound family
======================

The 3x7 grid with five long diagonals and four extra dots on the end columns
has no two far-apart X-Y paths, yet no small ball meets all of them.  Here we
build the graph, subdivide it, and measure both sides with the exact oracle.
"""
import numpy as np

from distantpaths import figure1_instance, solve, verify_certificate
from distantpaths.oracle import exact_distant_paths, min_hitting_ball

# %%
# The base graph.  Rows are 0..6, 7..13, 14..20; vertices 21..24 are the dots.
inst = figure1_instance(2)
g = inst.graph
print("vertices", g.vertex_count, "edges", g.edge_count)
print("X", sorted(inst.x), "Y", sorted(inst.y))

deg = np.array([len(nb) for nb in g.adjacency])
print("degree histogram", np.bincount(deg))

# %%
# Subdivision scales every distance by d-1, so the counts grow linearly.
rows = []
for d in range(2, 6):
    inst = figure1_instance(d)
    g = inst.graph
    res = exact_distant_paths(g, inst.x, inst.y, d)
    center, radius = min_hitting_ball(g, inst.x, inst.y)
    rows.append((d, g.vertex_count, g.edge_count, res.outcome.value, radius, 2 * d - 3))

print(f"{'d':>2} {'n':>4} {'m':>4} {'oracle':>8} {'min r':>6} {'2d-3':>5}")
for d, n, m, outcome, radius, bound in rows:
    print(f"{d:>2} {n:>4} {m:>4} {outcome:>8} {radius:>6} {bound:>5}")

# %%
# At d=2 the minimum radius beats 2d-3 = 1.  From d=3 on it does not: a ball
# centred next to x1 on a subdivided edge reaches the closed neighbourhoods
# of two adjacent base vertices, and those already cut every X-Y path.
ratios = np.array([r[4] / r[0] for r in rows])
print("min radius / d:", np.round(ratios, 3))

# %%
# The solver itself returns the guaranteed ball of radius 121d, which the
# verifier accepts.
inst = figure1_instance(3)
cert = solve(inst.graph, inst.x, inst.y, inst.d)
print(cert, bool(verify_certificate(inst.graph, inst.x, inst.y, inst.d, cert)))
