"""Orthogonality graphs over exact rationals: families in which every
(m+1)-subset contains an orthogonal pair.

alpha(n, m) denotes the largest such family size in n-space.  Rational
pool searches certify lower bounds; they cannot rule out real
configurations.
"""

from transversal_lab.graphs import independence_number
from transversal_lab.ortho import (
    VectorFamily,
    alpha_check,
    alpha_lower_search,
    directions_of_height,
    matching_family_q2,
    ortho_graph,
    rstar_relation,
    standard_basis,
)

print("=== pairwise orthogonal families: alpha(n, 1) = n ===")
for n in range(2, 6):
    res = alpha_lower_search(n, 1, directions_of_height(n, 1))
    print(f"n={n}: exact pool search finds {len(res.family)} vectors")

print()
print("=== the plane: alpha(2, m) = 2m ===")
pool = directions_of_height(2, 3)
print(f"pool: all {len(pool)} canonical directions of height <= 3")
for m in (1, 2, 3):
    res = alpha_lower_search(2, m, pool)
    ids = rstar_relation(len(res.family), m)
    print(f"m={m}: {len(res.family)} vectors (exact over pool); "
          f"r*(m+1) = {ids.rstar_m_plus_1} = 2m+1")

fam = matching_family_q2(5)
g = ortho_graph(fam)
print(f"matching family for m=5: {len(fam)} vectors, ortho graph a perfect "
      f"matching, independence {independence_number(g)}")

print()
print("=== dimension 3 at m = 2: three orthogonal pairs ===")
res = alpha_lower_search(3, 2, directions_of_height(3, 1))
print(f"found {len(res.family)} = 2n vectors: {res.family.vectors}")

print()
print("=== dimension 4: frames beat the budgeted pool search ===")
frames = [
    [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
    [(1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1)],
    [(1, 1, 0, 0), (1, -1, 0, 0), (0, 0, 1, 1), (0, 0, 1, -1)],
    [(1, 0, 1, 0), (0, 1, 0, 1), (1, 0, -1, 0), (0, 1, 0, -1)],
    [(1, 0, 0, 1), (0, 1, 1, 0), (1, 0, 0, -1), (0, 1, -1, 0)],
]
frame_family = VectorFamily.from_raw(4, [v for f in frames for v in f])
print(f"five orthogonal frames: {len(frame_family)} vectors, "
      f"alpha_check(m=5): {alpha_check(frame_family, 5)}")
print("so alpha(4, 5) >= 20; any 6 vectors repeat a frame and yield an "
      "orthogonal pair")

pool4 = directions_of_height(4, 2)
res = alpha_lower_search(4, 5, pool4, node_budget=150_000)
print(f"budgeted search over the {len(pool4)}-vector height-2 pool: "
      f"{len(res.family)} vectors (exact: {res.exact})")
print("the reported 24-vector configuration in dimension 4 lies beyond "
      "this pool horizon; the stretch search records what it finds")
