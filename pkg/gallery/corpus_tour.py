"""
A tour of the default corpus
============================

Every instance gets a certificate: two paths at distance d, or a ball of
radius 121d.  On small instances the exact oracle tells us how far the
guaranteed radius is from the best possible one.
"""
from collections import Counter

import numpy as np

from distantpaths import HittingBall, default_corpus, solve_with_trace, verify_certificate
from distantpaths.oracle import Outcome, exact_distant_paths, min_hitting_ball

corpus = default_corpus()
print(len(corpus), "instances")

# %%
branches = Counter()
kinds = Counter()
for inst in corpus:
    cert, trace = solve_with_trace(inst.graph, inst.x, inst.y, inst.d)
    assert verify_certificate(inst.graph, inst.x, inst.y, inst.d, cert)
    branches[trace.branch] += 1
    kinds[cert.kind] += 1
print("branches:", dict(branches))
print("certificates:", dict(kinds))

# %%
# How big does a hitting ball really need to be?  Only where the oracle
# proves there are no far paths does the question make sense.
ratios = []
for inst in corpus:
    if inst.graph.vertex_count > 40 or inst.d == 1:
        continue
    res = exact_distant_paths(inst.graph, inst.x, inst.y, inst.d)
    got = min_hitting_ball(inst.graph, inst.x, inst.y)
    if res.outcome == Outcome.ABSENT and got is not None:
        ratios.append(got[1] / inst.d)
ratios = np.array(ratios)
print(f"{ratios.size} instances without far paths")
print("min radius / d: mean %.3f, max %.3f (guarantee: 121)" % (ratios.mean(), ratios.max()))
values, counts = np.unique(np.round(ratios, 2), return_counts=True)
for v, c in zip(values, counts):
    print(f"  {v:5.2f}  {'#' * int(c)}")
