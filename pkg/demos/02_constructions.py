"""Witness-graph constructions: layered blowups, half graphs, tensor
products, shift graphs, extension-property saturation, and the two-row
partition witnesses.
"""

from transversal_lab.constructions import (
    complete_bipartite,
    empty_bipartite,
    extension_property_holds,
    half_graph,
    henson_approx,
    layered_from_digraph,
    rado_partition_witness,
    shift_graph,
    tensor,
)
from transversal_lab.graphs import UGraph, has_clique, independence_number, is_independent
from transversal_lab.ramsey import circulant_digraph, search_dr

print("=== layered blowup of a digraph ===")
# rows are vertex classes; (i, s) ~ (j, u) iff arc i -> j and s < u
c3 = circulant_digraph(3, [1])
pg = layered_from_digraph(c3, 5)
print(f"3-cycle at depth 5: {pg.graph.order} vertices, {pg.graph.edge_count()} edges")
print(f"K_3-free (the 3-cycle has no transitive triple): {not has_clique(pg.graph, 3)}")

w8 = search_dr(3, 3).certificate.digraph
pg = layered_from_digraph(w8, 4)
print(f"dr(3,3) extremal digraph at depth 4: order {pg.graph.order}, "
      f"K_3-free: {not has_clique(pg.graph, 3)}")

print()
print("=== bipartite generators ===")
h = half_graph(4)
print(f"half graph H_4,4 edges: {h.graph.edges()}")
print(f"complete bipartite K_3,3 edges: {complete_bipartite(3).graph.edge_count()}")
print(f"empty bipartite: {empty_bipartite(3).graph.edge_count()} edges")

print()
print("=== tensor blowup ===")
t = tensor(UGraph.complete(3), UGraph.empty(4))
print(f"K_3 (x) E_4: {t.order} vertices; independence number {independence_number(t)}")
print("independent sets are confined to single fibers")

print()
print("=== shift graphs ===")
for big_n in (4, 6, 8):
    g = shift_graph(2, big_n)
    print(f"Sh_2({big_n}): {g.order} vertices, {g.edge_count()} edges, "
          f"triangle-free: {not has_clique(g, 3)}")

print()
print("=== extension-property saturation (K_3-free) ===")
g = henson_approx(3, 2, UGraph.empty(2))
print(f"2 sweeps over E_2: {g.order} vertices, K_3-free: {not has_clique(g, 3)}")
print(f"extension property over the 6 pre-sweep vertices (pairs up to size 3): "
      f"{extension_property_holds(g, 3, range(6), pair_cap=3)}")

print()
print("=== two-row partition witness from the half graph ===")
pg = rado_partition_witness(30)
extra = pg.graph.edge_count() - 30 * 29 // 2
print(f"depth 30: {pg.graph.order} vertices, {extra} edges beyond the half graph")
print(f"row 1 stays independent: {is_independent(pg.graph, pg.classes[1])}")
print("so every clique meets row 1 in at most one vertex")
