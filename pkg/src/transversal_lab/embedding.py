"""Finite analyzers for bipartite embedding structure: half-graph order
between two vertex sets, the rich-pair dichotomy surrogate, and balanced
induced embedding of a bipartite pattern into a 2-class partitioned graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .constructions import PartitionedGraph
from .graphs import UGraph, bits, mask_of


@dataclass(frozen=True)
class BipartitePattern:
    """A finite bipartite graph given by side sizes and cross edges.

    Edges are pairs (left index, right index), 0-based within each side.
    """

    left_size: int
    right_size: int
    cross_edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for a, b in self.cross_edges:
            if not (0 <= a < self.left_size and 0 <= b < self.right_size):
                raise ValueError(f"edge ({a},{b}) outside declared sides")

    @classmethod
    def from_json_dict(cls, data: dict) -> "BipartitePattern":
        return cls(
            int(data["left"]),
            int(data["right"]),
            frozenset((int(a), int(b)) for a, b in data["edges"]),
        )

    def right_neighbour_sets(self) -> list[frozenset[int]]:
        return [
            frozenset(a for a, b in self.cross_edges if b == j)
            for j in range(self.right_size)
        ]


SINGLE_EDGE = BipartitePattern(1, 1, frozenset({(0, 0)}))


# ---------------------------------------------------------------------------
# half-graph order
# ---------------------------------------------------------------------------


@dataclass
class HalfOrderResult:
    order: int
    exact: bool
    a_sequence: tuple[int, ...]
    b_sequence: tuple[int, ...]

    def verify(self, g: UGraph) -> bool:
        k = self.order
        if len(self.a_sequence) != k or len(self.b_sequence) != k:
            return False
        if len(set(self.a_sequence) | set(self.b_sequence)) != 2 * k:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                if not g.has_edge(self.a_sequence[i], self.b_sequence[j]):
                    return False
        return True


def _assign_b_sequence(g: UGraph, a_seq: tuple[int, ...], bmask: int) -> tuple[int, ...]:
    """Distinct b_1..b_k with b_j adjacent to a_1..a_{j-1}; the pools are
    nested, so assigning from the tightest pool upward always succeeds
    when the size conditions hold."""
    k = len(a_seq)
    pools = [bmask]
    for v in a_seq[:-1]:
        pools.append(pools[-1] & g.adj[v])
    chosen: dict[int, int] = {}
    used = 0
    for j in range(k - 1, -1, -1):
        pick = next(v for v in bits(pools[j] & ~used))
        chosen[j] = pick
        used |= 1 << pick
    return tuple(chosen[j] for j in range(k))


def half_graph_order(
    g: UGraph,
    a: Iterable[int],
    b: Iterable[int],
    *,
    exact_cap: int = 6,
    node_budget: Optional[int] = None,
) -> HalfOrderResult:
    """Largest k such that the half graph H_{k,k} embeds into g[a, b] as a
    subgraph: sequences a_1..a_k from a and b_1..b_k from b with the edge
    a_i b_j present whenever i < j; all other pairs are unconstrained.

    For a fixed a-side sequence the b-candidate pools
    S_j = b n N(a_1) n ... n N(a_{j-1}) are nested, so distinct b_j exist
    iff |S_j| >= k - j + 1 for every j, and the certified order of an
    a-prefix is min(length, min_j(|S_j| + j - 1)).  The search is exact
    for answers up to exact_cap and extends the best prefix greedily
    beyond; nonempty sides always certify order >= 1 since the single
    pair carries no required edge.
    """
    amask, bmask = mask_of(a), mask_of(b)
    if amask & bmask:
        raise ValueError("sides must be disjoint")
    if amask == 0 or bmask == 0:
        return HalfOrderResult(0, True, (), ())
    adj = g.adj
    nodes = 0
    budget_hit = False
    best_k = 0
    best_seq: tuple[int, ...] = ()

    def record(seq: list[int], fmin: int) -> None:
        nonlocal best_k, best_seq
        depth = len(seq)
        cert = min(depth, fmin)
        if cert > best_k:
            best_k = cert
            best_seq = tuple(seq[:cert])

    def search(seq: list[int], used: int, pool: int, fmin: int) -> None:
        """pool = b n N(all chosen); fmin = min over pools seen so far of
        |S_j| + j - 1, covering indices j = 1..len(seq)."""
        nonlocal nodes, budget_hit
        depth = len(seq)
        if depth >= exact_cap + 1:
            return
        # appending any vertex makes S_{depth+1} = pool the binding pool
        next_fmin_cap = min(fmin, pool.bit_count() + depth)
        potential = min(depth + (amask & ~used).bit_count(), next_fmin_cap)
        if depth >= 1 and potential <= best_k:
            return
        for v in bits(amask & ~used):
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                budget_hit = True
                return
            new_fmin = min(fmin, pool.bit_count() + depth)
            seq.append(v)
            record(seq, new_fmin)
            search(seq, used | (1 << v), pool & adj[v], new_fmin)
            seq.pop()
            if budget_hit:
                return

    search([], 0, bmask, 1 << 30)

    exact = not budget_hit and best_k <= exact_cap
    if not budget_hit and best_k == exact_cap + 1:
        # greedy extension: keep appending the a-vertex that preserves the
        # largest next pool, updating the certified order as it grows
        seq = list(best_seq)
        used = mask_of(seq)
        pool = bmask
        fmin = 1 << 30
        for idx, v in enumerate(seq):
            fmin = min(fmin, pool.bit_count() + idx)
            pool &= adj[v]
        while True:
            remaining = amask & ~used
            if not remaining:
                break
            v = max(bits(remaining), key=lambda u: ((pool & adj[u]).bit_count(), -u))
            fmin = min(fmin, pool.bit_count() + len(seq))
            seq.append(v)
            used |= 1 << v
            pool &= adj[v]
            cert = min(len(seq), fmin)
            if cert <= best_k:
                seq.pop()
                break
            best_k = cert
            best_seq = tuple(seq[:cert])
    a_seq = best_seq
    b_seq = _assign_b_sequence(g, a_seq, bmask) if best_k else ()
    return HalfOrderResult(best_k, exact, a_seq, b_seq)


# ---------------------------------------------------------------------------
# rich-pair dichotomy surrogate
# ---------------------------------------------------------------------------


@dataclass
class RichPairVerdict:
    kind: str  # empty_pair | half_graph | inconclusive
    # witness sides in structure order: for a half_graph verdict with
    # direction "ba" the a_witness vertices come from the b input
    a_witness: tuple[int, ...] = ()
    b_witness: tuple[int, ...] = ()
    direction: str = "ab"


def _find_empty_biclique(
    g: UGraph, amask: int, bmask: int, k: int, node_budget: Optional[int]
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """k vertices from each side with no cross edge at all (a K_{k,k} in
    the bipartite complement), lexicographically least on the a side."""
    adj = g.adj
    nodes = 0

    def rec(chosen: list[int], avail_a: int, cand_b: int) -> Optional[tuple]:
        nonlocal nodes
        if len(chosen) == k:
            picks = []
            rest = cand_b
            for _ in range(k):
                low = rest & -rest
                picks.append(low.bit_length() - 1)
                rest ^= low
            return tuple(chosen), tuple(picks)
        for v in bits(avail_a):
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                return None
            nb = cand_b & ~adj[v]
            if nb.bit_count() < k:
                continue
            if (avail_a & ~((1 << (v + 1)) - 1)).bit_count() + len(chosen) + 1 < k:
                return None
            got = rec(chosen + [v], avail_a & ~((1 << (v + 1)) - 1), nb)
            if got is not None:
                return got
        return None

    return rec([], amask, bmask)


def rich_pair_surrogate(
    g: UGraph,
    a: Iterable[int],
    b: Iterable[int],
    k: int,
    *,
    node_budget: Optional[int] = None,
) -> RichPairVerdict:
    """Finite surrogate of the rich-pair dichotomy: first look for a
    cross-empty K_{k,k} between the sides, then for a half-graph witness
    of order k in either direction, else report inconclusive.
    """
    amask, bmask = mask_of(a), mask_of(b)
    if amask.bit_count() < k or bmask.bit_count() < k:
        raise ValueError("both sides must have at least k vertices")
    found = _find_empty_biclique(g, amask, bmask, k, node_budget)
    if found is not None:
        return RichPairVerdict("empty_pair", found[0], found[1])
    for direction, (side1, side2) in (("ab", (amask, bmask)), ("ba", (bmask, amask))):
        res = half_graph_order(
            g, bits(side1), bits(side2), exact_cap=k, node_budget=node_budget
        )
        if res.order >= k:
            return RichPairVerdict(
                "half_graph", res.a_sequence[:k], res.b_sequence[:k], direction
            )
    return RichPairVerdict("inconclusive")


# ---------------------------------------------------------------------------
# balanced induced embedding
# ---------------------------------------------------------------------------


@dataclass
class EmbeddingReport:
    """A verified embedding of a bipartite pattern into a host graph.

    kind is "subgraph" or "induced"; side_assignment records which host
    class received the left side and which the right.
    """

    kind: str
    left_images: tuple[int, ...]
    right_images: tuple[int, ...]
    side_assignment: tuple[int, int]

    def verify(self, host: PartitionedGraph, pattern: BipartitePattern) -> bool:
        imgs = self.left_images + self.right_images
        if len(set(imgs)) != len(imgs):
            return False
        if len(self.left_images) != pattern.left_size:
            return False
        if len(self.right_images) != pattern.right_size:
            return False
        g = host.graph
        left_cls, right_cls = self.side_assignment
        if not all(v in host.classes[left_cls] for v in self.left_images):
            return False
        if not all(v in host.classes[right_cls] for v in self.right_images):
            return False
        for i in range(pattern.left_size):
            for j in range(pattern.right_size):
                want = (i, j) in pattern.cross_edges
                have = g.has_edge(self.left_images[i], self.right_images[j])
                if want and not have:
                    return False
                if self.kind == "induced" and have != want:
                    return False
        if self.kind == "induced":
            for side in (self.left_images, self.right_images):
                for i, u in enumerate(side):
                    for v in side[i + 1 :]:
                        if g.has_edge(u, v):
                            return False
        return True


@dataclass
class EmbedOutcome:
    report: Optional[EmbeddingReport]
    exact: bool  # True when absence is backed by an exhausted search
    nodes: int = 0


def balanced_induced_embed(
    host: PartitionedGraph,
    pattern: BipartitePattern,
    *,
    node_budget: Optional[int] = None,
) -> EmbedOutcome:
    """Induced embedding of a bipartite pattern with its sides landing in
    the two distinct classes of the host.

    Tries the left side in class 0 first, then in class 1; within an
    assignment vertices are mapped in ascending host order with adjacency
    signature pruning, so the first embedding found is the
    lexicographically least under that preference order.
    """
    if pattern.left_size < 1 or pattern.right_size < 1:
        raise ValueError("pattern sides must be nonempty")
    if host.num_classes != 2:
        raise ValueError("host must have exactly 2 classes")
    g = host.graph
    adj = g.adj
    class_masks = host.class_masks()
    right_nbrs = pattern.right_neighbour_sets()
    nodes = 0
    budget_hit = False

    def try_assignment(left_cls: int) -> Optional[EmbeddingReport]:
        nonlocal nodes, budget_hit
        lmask = class_masks[left_cls]
        rmask = class_masks[1 - left_cls]
        left_images: list[int] = []
        right_images: list[int] = []

        def place_right(j: int, used: int) -> bool:
            nonlocal nodes, budget_hit
            if j == pattern.right_size:
                return True
            want = right_nbrs[j]
            for v in bits(rmask & ~used):
                nodes += 1
                if node_budget is not None and nodes > node_budget:
                    budget_hit = True
                    return False
                ok = all(
                    g.has_edge(left_images[i], v) == (i in want)
                    for i in range(pattern.left_size)
                ) and not any(adj[v] & (1 << u) for u in right_images)
                if ok:
                    right_images.append(v)
                    if place_right(j + 1, used | (1 << v)):
                        return True
                    right_images.pop()
                if budget_hit:
                    return False
            return False

        def place_left(i: int, used: int) -> bool:
            nonlocal nodes, budget_hit
            if i == pattern.left_size:
                return place_right(0, used)
            for v in bits(lmask & ~used):
                nodes += 1
                if node_budget is not None and nodes > node_budget:
                    budget_hit = True
                    return False
                if any(adj[v] & (1 << u) for u in left_images):
                    continue
                left_images.append(v)
                if place_left(i + 1, used | (1 << v)):
                    return True
                left_images.pop()
                if budget_hit:
                    return False
            return False

        if place_left(0, 0):
            return EmbeddingReport(
                "induced",
                tuple(left_images),
                tuple(right_images),
                (left_cls, 1 - left_cls),
            )
        return None

    for left_cls in (0, 1):
        report = try_assignment(left_cls)
        if report is not None:
            if not report.verify(host, pattern):
                raise AssertionError("embedding failed its own re-verification")
            return EmbedOutcome(report, True, nodes)
        if budget_hit:
            return EmbedOutcome(None, False, nodes)
    return EmbedOutcome(None, True, nodes)
