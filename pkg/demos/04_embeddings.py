"""Embedding analyzers: half-graph order between vertex sets, the
rich-pair dichotomy surrogate, and balanced induced embedding of bipartite
patterns into 2-class hosts.

The last experiment embeds patterns into extension-property saturations
under random balanced splits and reports success rates; no threshold is
asserted, the rates are observations.
"""

import random

from transversal_lab.constructions import (
    PartitionedGraph,
    complete_bipartite,
    empty_bipartite,
    half_graph,
    henson_approx,
)
from transversal_lab.embedding import (
    SINGLE_EDGE,
    BipartitePattern,
    balanced_induced_embed,
    half_graph_order,
    rich_pair_surrogate,
)
from transversal_lab.graphs import UGraph

print("=== half-graph order ===")
for k in (3, 5, 7):
    pg = half_graph(k)
    res = half_graph_order(pg.graph, pg.classes[0], pg.classes[1], exact_cap=7)
    print(f"H_{k},{k} canonical sides: order {res.order} (exact: {res.exact})")
pg = empty_bipartite(5)
res = half_graph_order(pg.graph, pg.classes[0], pg.classes[1])
print(f"empty sides: order {res.order} (the single pair is vacuous)")

print()
print("=== rich-pair dichotomy surrogate ===")
for name, pg in (
    ("empty bipartite", empty_bipartite(4)),
    ("complete bipartite", complete_bipartite(4)),
    ("half graph", half_graph(6)),
):
    v = rich_pair_surrogate(pg.graph, pg.classes[0], pg.classes[1], 3)
    print(f"{name:18s} k=3 -> {v.kind}")
print("(finite half-graph sides admit a cross-empty block: top of one side "
      "against the bottom of the other)")

print()
print("=== balanced induced embedding ===")
out = balanced_induced_embed(half_graph(3), SINGLE_EDGE)
print(f"single edge into H_3,3: left {out.report.left_images} "
      f"right {out.report.right_images}")

print()
print("=== embedding into saturated K_3-free hosts, random balanced splits ===")
host_graph = henson_approx(3, 2, UGraph.empty(2))
patterns = {
    "single edge": SINGLE_EDGE,
    "path P_3": BipartitePattern(1, 2, frozenset({(0, 0), (0, 1)})),
    "2-matching": BipartitePattern(2, 2, frozenset({(0, 0), (1, 1)})),
    "C_4": BipartitePattern(2, 2, frozenset({(0, 0), (0, 1), (1, 0), (1, 1)})),
}
rng = random.Random(2026)
trials = 20
for name, pattern in patterns.items():
    hits = 0
    for _ in range(trials):
        verts = list(range(host_graph.order))
        rng.shuffle(verts)
        half = host_graph.order // 2
        host = PartitionedGraph(
            host_graph, (frozenset(verts[:half]), frozenset(verts[half:]))
        )
        out = balanced_induced_embed(host, pattern)
        if out.report is not None:
            assert out.report.verify(host, pattern)
            hits += 1
    print(f"{name:12s}: induced, side-respecting embedding in "
          f"{hits}/{trials} random splits")
