"""
Weaving two far paths
=====================

A long shortest path P runs from X to Y.  Beside it hang two components at
distance d1+1 = 5d: one reaches X, the other reaches Y, and they overlap in
the middle of P.  The solver glues them into a second path far from P.
"""
from distantpaths import DistantPaths, Graph, solve_with_trace, verify_certificate
from distantpaths.graph_core import subgraph_distance

d = 2
d1 = 5 * d
n = 200  # spine length


def hang(edges, count, rung, tail):
    """A rung of d1 new vertices off spine index ``rung`` and a tail of
    ``tail`` vertices beyond its top.  Returns the tail end and new count."""
    rung_vs = list(range(count, count + d1 + 1))
    tail_vs = list(range(count + d1 + 1, count + d1 + 1 + tail))
    chain = [rung - 1, *rung_vs, *tail_vs]
    edges += list(zip(chain, chain[1:]))
    return chain[-1], count + d1 + 1 + tail


edges = [(i, i + 1) for i in range(n - 1)]
x_end, count = hang(edges, n, 150, 155)
y_end, count = hang(edges, count, 50, 155)
g = Graph(count, edges)
x, y = {0, x_end}, {n - 1, y_end}
print("vertices", g.vertex_count, "edges", g.edge_count)

# %%
cert, trace = solve_with_trace(g, x, y, d)
print("branch:", trace.branch)
print("orchard sizes:", trace.transcript)
print("sequence tags:", trace.sequence.tags)
for h in trace.sequence.entries:
    print(f"  component of {len(h.vertices)} vertices, interval [{h.a}, {h.b}]")

# %%
assert isinstance(cert, DistantPaths)
p1, p2 = cert.p1, cert.p2
print("P1 length", len(p1) - 1, "P2 length", len(p2) - 1)
print("distance between them", subgraph_distance(g, p1, p2), ">= d =", d)
print("verified:", bool(verify_certificate(g, x, y, d, cert)))
