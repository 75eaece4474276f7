"""Balanced independent transversals: given a partitioned graph, find an
independent set meeting at least m classes in at least ell vertices each.
"""

from transversal_lab.constructions import PartitionedGraph, layered_from_digraph, tensor
from transversal_lab.graphs import UGraph
from transversal_lab.ramsey import circulant_digraph
from transversal_lab.transversal import estimate_N, find_transversal, max_profile

print("=== solving on a layered 3-cycle ===")
pg = layered_from_digraph(circulant_digraph(3, [1]), 3)
res = find_transversal(pg, 2, 1)
print(f"m=2, ell=1: {res.status}, witness {sorted(res.witness)}, profile {res.profile}")
res = find_transversal(pg, 3, 2)
print(f"m=3, ell=2: {res.status}")

print()
print("=== the blowup law ===")
# split each fiber of K_n (x) E_t into m-1 classes: independent sets live
# in one fiber, so no transversal ever meets more than m-1 classes largely
t = 8
for n, m in ((3, 3), (4, 4)):
    blown = tensor(UGraph.complete(n), UGraph.empty(t))
    parts = m - 1
    classes = []
    for f in range(n):
        buckets = [[] for _ in range(parts)]
        for i in range(t):
            buckets[i % parts].append(f * t + i)
        classes.extend(frozenset(b) for b in buckets)
    pg = PartitionedGraph(blown, tuple(classes))
    for ell in (1, t // parts):
        print(f"K_{n} (x) E_{t}, {n * parts} classes, ell={ell}: "
              f"max_profile = {max_profile(pg, ell)} (law predicts {m - 1})")

print()
print("=== empirical evidence toward the finite threshold N(n, m, ell) ===")
est = estimate_N(3, 2, 1, 1, r=4, candidates=30)
print(f"N(3,2,1) at class size 1: counterexample found: "
      f"{est.best_counterexample is not None} "
      f"(none exists: every K_3-free graph on 4 singleton classes has one)")

est = estimate_N(3, 2, 2, 2, r=4, strategy="local-search", candidates=40)
if est.best_counterexample is not None:
    pg = est.best_counterexample
    print(f"N(3,2,2) at class size 2: counterexample found after "
          f"{est.candidates_tried} candidates -> N(3,2,2) > 2")
    print(f"  {pg.graph.order} vertices, {pg.graph.edge_count()} edges, "
          f"classes {[sorted(c) for c in pg.classes]}")
else:
    print(f"N(3,2,2) at class size 2: no counterexample in "
          f"{est.candidates_tried} candidates")
