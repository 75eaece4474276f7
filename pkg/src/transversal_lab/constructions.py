"""Witness-graph generators: layered digraph blowups, half graphs, tensor
products, shift graphs, extension-property saturations, and the two-row
partition witnesses.

All generators are deterministic given their parameters and return
immutable values.  Infinite objects are represented by their initial
segments; the truncation depth is always an explicit caller parameter.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import CapExceeded
from .graphs import BitDigraph, UGraph, bits, has_clique, mask_of


@dataclass(frozen=True)
class PartitionedGraph:
    """A graph together with an ordered partition of its vertices.

    Classes are pairwise disjoint and cover the vertex set; class order is
    meaningful (class index i is V_i).
    """

    graph: UGraph
    classes: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen = 0
        for cls in self.classes:
            m = mask_of(cls)
            if m & seen:
                raise ValueError("partition classes overlap")
            seen |= m
        if seen != (1 << self.graph.order) - 1:
            raise ValueError("partition classes must cover every vertex")

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def class_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(c) for c in self.classes)

    def classes_json(self) -> str:
        return json.dumps({"classes": [sorted(c) for c in self.classes]})

    @classmethod
    def from_classes_json(cls, graph: UGraph, text: str) -> "PartitionedGraph":
        data = json.loads(text)
        return cls(graph, tuple(frozenset(c) for c in data["classes"]))


def layered_from_digraph(digraph: BitDigraph, depth: int) -> PartitionedGraph:
    """Layered blowup of a digraph: vertex set r x depth, classes the rows.

    Vertices (i, s) and (j, u) are adjacent iff the digraph has the arc
    i -> j and s < u, or the arc j -> i and u < s.  If the digraph has no
    transitive n-set the output is K_n-free: a clique would order its
    layer indices by the second coordinate and read off a transitive
    tuple.  Vertex (i, s) is numbered i * depth + s, so each class is a
    contiguous block.
    """
    if digraph.order < 1:
        raise ValueError("digraph must have at least one vertex")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    r, t = digraph.order, depth
    n_vertices = r * t
    adj = [0] * n_vertices
    for i in range(r):
        for j in bits(digraph.out[i]):
            for s in range(t):
                for u in range(s + 1, t):
                    a, b = i * t + s, j * t + u
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a
    graph = UGraph(n_vertices, adj)
    classes = tuple(frozenset(range(i * t, (i + 1) * t)) for i in range(r))
    return PartitionedGraph(graph, classes)


def half_graph(k: int) -> PartitionedGraph:
    """Half graph on sides of size k: (0, a) ~ (1, b) iff a < b.

    Side 0 occupies vertices 0..k-1, side 1 occupies k..2k-1.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    edges = [(a, k + b) for a in range(k) for b in range(k) if a < b]
    return PartitionedGraph(
        UGraph.from_edges(2 * k, edges),
        (frozenset(range(k)), frozenset(range(k, 2 * k))),
    )


def complete_bipartite(k: int) -> PartitionedGraph:
    if k < 0:
        raise ValueError("k must be >= 0")
    edges = [(a, k + b) for a in range(k) for b in range(k)]
    return PartitionedGraph(
        UGraph.from_edges(2 * k, edges),
        (frozenset(range(k)), frozenset(range(k, 2 * k))),
    )


def empty_bipartite(k: int) -> PartitionedGraph:
    if k < 0:
        raise ValueError("k must be >= 0")
    return PartitionedGraph(
        UGraph.empty(2 * k),
        (frozenset(range(k)), frozenset(range(k, 2 * k))),
    )


def tensor(g: UGraph, h: UGraph) -> UGraph:
    """Blowup product on V(g) x V(h): (u, v) ~ (u', v') iff u = u' and
    vv' is an edge of h, or uu' is an edge of g.

    Vertex (u, v) is numbered u * h.order + v.  tensor(K_n, E_t) blows each
    vertex of K_n into an independent set of size t; its independent sets
    are exactly the subsets of single fibers.
    """
    nh = h.order
    n_vertices = g.order * nh
    adj = [0] * n_vertices
    for u in range(g.order):
        base = u * nh
        for v in range(nh):
            row = 0
            for w in bits(h.adj[v]):
                row |= 1 << (base + w)
            for u2 in bits(g.adj[u]):
                row |= ((1 << nh) - 1) << (u2 * nh)
            adj[base + v] = row
    return UGraph(n_vertices, adj)


def shift_graph(n: int, big_n: int, *, vertex_cap: int = 100000) -> UGraph:
    """Shift graph on the n-subsets of {0..big_n-1}.

    Subsets p, q are adjacent iff their union is an ascending chain
    xi_0 < ... < xi_n with p the first n elements and q the last n (or the
    other way round).  Vertices are the subsets in lexicographic order of
    their sorted tuples.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if big_n < n:
        raise ValueError("big_n must be >= n")
    count = comb(big_n, n)
    if count > vertex_cap:
        raise CapExceeded(f"{count} vertices exceeds cap {vertex_cap}")
    verts = list(combinations(range(big_n), n))
    index = {p: i for i, p in enumerate(verts)}
    adj = [0] * count
    for i, p in enumerate(verts):
        # q = p shifted up: drop p[0], append one element above p[-1]
        tail = p[1:]
        for extra in range(p[-1] + 1, big_n):
            q = tail + (extra,)
            j = index[q]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return UGraph(count, adj)


# ---------------------------------------------------------------------------
# extension-property saturation (Henson-style approximations)
# ---------------------------------------------------------------------------


def _is_clique_free(adj: Sequence[int], members: int, k: int) -> bool:
    """No k-clique inside the vertex mask `members` (adjacency as masks)."""
    if k <= 1:
        return members == 0 if k == 1 else True

    def extend(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if cand.bit_count() + 1 < need:
                return False
            if extend(cand & adj[v], need - 1):
                return True
        return False

    return not extend(members, k)


def henson_approx(
    n: int,
    rounds: int,
    seed_graph: UGraph,
    rng_seed: Optional[int] = None,
    *,
    pair_cap: int = 3,
    vertex_budget: int = 4096,
) -> UGraph:
    """Saturate the K_n-free extension property over `rounds` sweeps.

    Each sweep fixes the vertex set present at its start and, for every
    pair of disjoint sets (A, B) over it with |A u B| <= pair_cap and B
    inducing a K_{n-1}-free subgraph, adds one fresh vertex adjacent to
    exactly B, unless some existing vertex already avoids A and dominates
    B.  Fresh vertices only ever attach to older ones, and only to
    K_{n-1}-free sets, so the output stays K_n-free whenever the seed is.

    rng_seed shuffles the pair-processing order within each sweep; None
    keeps the ascending (size, lexicographic) order.  Either way the
    output is a deterministic function of the parameters.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if rounds < 0:
        raise ValueError("rounds must be >= 0")
    if has_clique(seed_graph, n):
        raise ValueError("seed graph must be K_n-free")
    adj: list[int] = list(seed_graph.adj)
    rng = random.Random(rng_seed) if rng_seed is not None else None

    for _ in range(rounds):
        base = len(adj)
        pairs = []
        for size in range(pair_cap + 1):
            for union in combinations(range(base), size):
                for asize in range(size + 1):
                    for aset in combinations(union, asize):
                        amask = mask_of(aset)
                        bmask = mask_of(union) & ~amask
                        pairs.append((amask, bmask))
        if rng is not None:
            rng.shuffle(pairs)
        for amask, bmask in pairs:
            if not _is_clique_free(adj, bmask, n - 1):
                continue
            exclude = amask | bmask
            satisfied = False
            for v in range(len(adj)):
                if (1 << v) & exclude:
                    continue
                if adj[v] & amask == 0 and adj[v] & bmask == bmask:
                    satisfied = True
                    break
            if satisfied:
                continue
            if len(adj) >= vertex_budget:
                raise CapExceeded(f"vertex budget {vertex_budget} hit")
            w = len(adj)
            adj.append(bmask)
            for u in bits(bmask):
                adj[u] |= 1 << w
    return UGraph(len(adj), adj)


def extension_property_holds(
    g: UGraph, n: int, base_vertices: Iterable[int], pair_cap: int = 3
) -> bool:
    """Exhaustively check the K_n-free extension property over a vertex set:
    every disjoint (A, B) with |A u B| <= pair_cap and B K_{n-1}-free has a
    witness vertex in g avoiding A and dominating B."""
    base = sorted(base_vertices)
    for size in range(pair_cap + 1):
        for union in combinations(base, size):
            for asize in range(size + 1):
                for aset in combinations(union, asize):
                    amask = mask_of(aset)
                    bmask = mask_of(union) & ~amask
                    if not _is_clique_free(g.adj, bmask, n - 1):
                        continue
                    exclude = amask | bmask
                    if not any(
                        g.adj[v] & amask == 0 and g.adj[v] & bmask == bmask
                        for v in range(g.order)
                        if not (1 << v) & exclude
                    ):
                        return False
    return True


# ---------------------------------------------------------------------------
# two-row partition witnesses
# ---------------------------------------------------------------------------


def _subset_pairs_lex(ids: Sequence[int]):
    """Pairs of subsets ordered by (total size, first set, second set)."""
    n = len(ids)
    for total in range(0, 2 * n + 1):
        layer = []
        for size_a in range(0, min(total, n) + 1):
            size_b = total - size_a
            if size_b > n:
                continue
            for aset in combinations(ids, size_a):
                for bset in combinations(ids, size_b):
                    layer.append((aset, bset))
        layer.sort()
        yield from layer


def partition_extension_witness(
    g: UGraph, a: Iterable[int], b: Iterable[int], n: int, pair_budget: int
) -> PartitionedGraph:
    """Finite two-class extension of a K_n-free graph around a vertex split.

    Fresh vertices W are appended after V(g).  The first pair_budget pairs
    (a_k, b_k) of subsets of V(g) u W are processed in (total size, lex)
    order: when b_k induces a K_{n-1}-free subgraph, the next still
    isolated vertex of W outside a_k u b_k is connected to every vertex of
    b_k.  Returns classes V_0 = W u a and V_1 = b.  The input graph sits
    inside the output induced and identically labelled, and the output is
    K_n-free whenever g is.
    """
    if has_clique(g, n):
        raise ValueError("input graph must be K_n-free")
    aset, bset = frozenset(a), frozenset(b)
    if aset & bset or aset | bset != frozenset(range(g.order)):
        raise ValueError("a and b must partition the vertices of g")
    if pair_budget < 0:
        raise ValueError("pair_budget must be >= 0")
    total = g.order + pair_budget
    adj = list(g.adj) + [0] * pair_budget
    free_w = list(range(g.order, total))
    processed = 0
    for pair in _subset_pairs_lex(list(range(total))):
        if processed >= pair_budget or not free_w:
            break
        processed += 1
        a_k, b_k = pair
        bmask = mask_of(b_k)
        if not _is_clique_free(adj, bmask, n - 1):
            continue
        used = set(a_k) | set(b_k)
        w = next((v for v in free_w if v not in used), None)
        if w is None:
            continue
        free_w.remove(w)
        adj[w] = bmask
        for u in b_k:
            adj[u] |= 1 << w
    graph = UGraph(total, adj)
    classes = (
        frozenset(range(g.order, total)) | aset,
        bset,
    )
    return PartitionedGraph(graph, classes)


def rado_partition_witness(depth: int) -> PartitionedGraph:
    """Finite truncation of the half-graph-based two-row partition witness.

    Start from the half graph on rows of size depth: (k, 0) ~ (l, 1) iff
    k < l.  Pairs (a_j, b_j) of subsets of the vertex set are enumerated by
    total size then lexicographically on (b_j, a_j); each step computes
    m_j = max{k : (k, i) in a_j u b_j} + m_{j-1} and, while m_j stays below
    depth, connects (m_j, 0) to every vertex of a_j.  Rows are the two
    classes.  Row 1 never gains internal edges, so every clique meets it
    in at most one vertex.

    The index sequence m_j grows with every processed pair, so the pairs
    whose a_j is nonempty (the only ones that add edges) must come first
    within each size layer; comparing b_j before a_j achieves that.

    Vertex (k, i) is numbered i * depth + k.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    adj = [0] * (2 * depth)
    for k in range(depth):
        for l in range(k + 1, depth):
            a, b = k, depth + l
            adj[a] |= 1 << b
            adj[b] |= 1 << a

    def row_index(v: int) -> int:
        return v % depth if v < depth else v - depth

    m_prev = 0
    for b_j, a_j in _subset_pairs_lex(list(range(2 * depth))):
        members = a_j + b_j
        top = max((row_index(v) for v in members), default=0)
        m_j = top + m_prev
        m_prev = m_j
        if m_j >= depth:
            break
        left = m_j  # vertex (m_j, 0)
        for v in a_j:
            if v != left:
                adj[left] |= 1 << v
                adj[v] |= 1 << left
    graph = UGraph(2 * depth, adj)
    return PartitionedGraph(
        graph,
        (frozenset(range(depth)), frozenset(range(depth, 2 * depth))),
    )
