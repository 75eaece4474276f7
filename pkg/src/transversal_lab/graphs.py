"""Core graph and digraph values plus the predicates everything else builds on.

Both graph kinds store neighbourhoods as Python int bitsets (bit v set means
vertex v is a neighbour).  Values are immutable after construction and safe
to share across workers; every operation here is a pure function.

Vertex sets are plain ints used as bitmasks internally; the public API
accepts any iterable of vertex indices and converts.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .errors import BudgetExceeded

DIGRAPH_MAX_ORDER = 128


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class UGraph:
    """Loop-free undirected graph on vertices 0..order-1.

    Invariants: no self-loops, adjacency is symmetric.  Both are enforced
    at construction time.
    """

    __slots__ = ("order", "adj")

    def __init__(self, order: int, adj: Sequence[int]):
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(adj) != order:
            raise ValueError("adjacency length must equal order")
        for v, row in enumerate(adj):
            if row >> order:
                raise ValueError(f"vertex {v} has neighbours outside 0..{order - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(order):
            for u in bits(adj[v]):
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.order = order
        self.adj = tuple(adj)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "UGraph":
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, adj)

    @classmethod
    def empty(cls, order: int) -> "UGraph":
        return cls(order, [0] * order)

    @classmethod
    def complete(cls, order: int) -> "UGraph":
        full = (1 << order) - 1
        return cls(order, [full ^ (1 << v) for v in range(order)])

    @classmethod
    def cycle(cls, order: int) -> "UGraph":
        if order < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls.from_edges(order, [(v, (v + 1) % order) for v in range(order)])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def complement(self) -> "UGraph":
        full = (1 << self.order) - 1
        return UGraph(self.order, [full ^ self.adj[v] ^ (1 << v) for v in range(self.order)])

    def induced(self, vertices: Iterable[int]) -> "UGraph":
        """Subgraph induced by the given vertices, relabelled in ascending order."""
        verts = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        for i, v in enumerate(verts):
            for u in bits(self.adj[v]):
                if u in pos:
                    adj[i] |= 1 << pos[u]
        return UGraph(len(verts), adj)

    def __eq__(self, other) -> bool:
        return isinstance(other, UGraph) and self.order == other.order and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.order, self.adj))

    def __repr__(self) -> str:
        return f"UGraph(order={self.order}, edges={self.edge_count()})"


class BitDigraph:
    """Loop-free directed graph on at most 128 vertices.

    2-cycles (u->v and v->u together) are legal; self-loops are not.
    """

    __slots__ = ("order", "out")

    def __init__(self, order: int, out: Sequence[int]):
        if not 0 <= order <= DIGRAPH_MAX_ORDER:
            raise ValueError(f"digraph order must be 0..{DIGRAPH_MAX_ORDER}")
        if len(out) != order:
            raise ValueError("out-neighbour list length must equal order")
        for v, row in enumerate(out):
            if row >> order:
                raise ValueError(f"vertex {v} has arcs outside 0..{order - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        self.order = order
        self.out = tuple(out)

    @classmethod
    def from_arcs(cls, order: int, arcs: Iterable[tuple[int, int]]) -> "BitDigraph":
        out = [0] * order
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            out[u] |= 1 << v
        return cls(order, out)

    @classmethod
    def empty(cls, order: int) -> "BitDigraph":
        return cls(order, [0] * order)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bits(self.out[u])]

    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.out)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def in_masks(self) -> tuple[int, ...]:
        inn = [0] * self.order
        for u in range(self.order):
            for v in bits(self.out[u]):
                inn[v] |= 1 << u
        return tuple(inn)

    def nonadjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex mask of vertices with no arc in either direction."""
        full = (1 << self.order) - 1
        inn = self.in_masks()
        return tuple(
            full ^ (self.out[v] | inn[v] | (1 << v)) for v in range(self.order)
        )

    def underlying_ugraph(self) -> UGraph:
        inn = self.in_masks()
        return UGraph(self.order, [self.out[v] | inn[v] for v in range(self.order)])

    def relabel(self, perm: Sequence[int]) -> "BitDigraph":
        """Digraph with vertex v renamed perm[v]."""
        out = [0] * self.order
        for u in range(self.order):
            row = 0
            for v in bits(self.out[u]):
                row |= 1 << perm[v]
            out[perm[u]] = row
        return BitDigraph(self.order, out)

    def delete_vertex(self, v: int) -> "BitDigraph":
        keep = [u for u in range(self.order) if u != v]
        pos = {u: i for i, u in enumerate(keep)}
        out = [0] * len(keep)
        for u in keep:
            for w in bits(self.out[u]):
                if w != v:
                    out[pos[u]] |= 1 << pos[w]
        return BitDigraph(len(keep), out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitDigraph)
            and self.order == other.order
            and self.out == other.out
        )

    def __hash__(self) -> int:
        return hash((self.order, self.out))

    def __repr__(self) -> str:
        return f"BitDigraph(order={self.order}, arcs={self.arc_count()})"


# ---------------------------------------------------------------------------
# clique / independence predicates
# ---------------------------------------------------------------------------


def find_clique(g: UGraph, k: int) -> Optional[tuple[int, ...]]:
    """Lexicographically least k-clique of g, or None.

    Depth-first over vertices in ascending order, intersecting candidate
    sets, so the first complete branch is the lexicographically least
    witness.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > g.order:
        return None
    adj = g.adj
    witness: list[int] = []

    def extend(candidates: int, need: int) -> bool:
        if need == 0:
            return True
        if candidates.bit_count() < need:
            return False
        for v in bits(candidates):
            witness.append(v)
            if extend(candidates & adj[v] & ~((1 << (v + 1)) - 1), need - 1):
                return True
            witness.pop()
        return False

    if extend((1 << g.order) - 1, k):
        return tuple(witness)
    return None


def has_clique(g: UGraph, k: int) -> bool:
    """True iff some k vertices of g are pairwise adjacent."""
    return find_clique(g, k) is not None


def is_independent(g: UGraph, vertices: Iterable[int]) -> bool:
    """True iff no two of the given vertices are adjacent in g."""
    m = mask_of(vertices)
    if m >> g.order:
        raise ValueError("vertex set not contained in the graph")
    for v in bits(m):
        if g.adj[v] & m:
            return False
    return True


def max_independent_set(
    g: UGraph,
    *,
    order_cap: int = 64,
    node_budget: Optional[int] = None,
) -> tuple[int, int]:
    """Exact maximum independent set, returned as (size, vertex mask).

    Branch and bound on the complement: repeatedly branch on the lowest
    remaining vertex (take it or not), pruning when even taking every
    remaining candidate cannot beat the incumbent.  Deterministic, so the
    returned witness is reproducible.

    Raises BudgetExceeded if g has more than order_cap vertices or the
    node budget runs out before exhaustion.
    """
    if g.order > order_cap:
        raise BudgetExceeded(
            f"order {g.order} exceeds exact-search cap {order_cap}",
            order=g.order,
        )
    adj = g.adj
    best_size = 0
    best_mask = 0
    nodes = 0

    def grow(chosen: int, size: int, candidates: int) -> None:
        nonlocal best_size, best_mask, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise BudgetExceeded(
                "independent-set node budget exhausted",
                best_size=best_size,
                best_mask=best_mask,
            )
        if size > best_size:
            best_size = size
            best_mask = chosen
        while candidates:
            if size + candidates.bit_count() <= best_size:
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            grow(chosen | low, size + 1, candidates & ~adj[v])

    grow(0, 0, (1 << g.order) - 1)
    return best_size, best_mask


def independence_number(g: UGraph, *, order_cap: int = 64, node_budget: Optional[int] = None) -> int:
    """Exact maximum independent-set size of g."""
    return max_independent_set(g, order_cap=order_cap, node_budget=node_budget)[0]


def has_independent_set(g: UGraph, k: int, within: Optional[int] = None) -> bool:
    """True iff g has an independent set of size k (optionally inside a mask).

    Early-exit search; cheaper than computing the full independence number
    when only a threshold matters.
    """
    if k <= 0:
        return True
    cand0 = (1 << g.order) - 1 if within is None else within
    adj = g.adj

    def rec(candidates: int, need: int) -> bool:
        if need == 0:
            return True
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            if candidates.bit_count() + 1 < need:
                return False
            if rec(candidates & ~adj[v], need - 1):
                return True
        return False

    return rec(cand0, k)


# ---------------------------------------------------------------------------
# digraph predicates
# ---------------------------------------------------------------------------


def find_transitive_set(d: BitDigraph, n: int) -> Optional[tuple[int, ...]]:
    """Lexicographically least ordered tuple v_1..v_n with every forward arc.

    A transitive n-set here is an ordered tuple of distinct vertices with
    v_i -> v_j present for all i < j; arcs in the reverse direction are
    permitted and ignored.  Returns None if no such tuple exists.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > d.order:
        return None
    out = d.out
    full = (1 << d.order) - 1
    witness: list[int] = []

    def extend(candidates: int, need: int) -> bool:
        if need == 0:
            return True
        for v in bits(candidates):
            witness.append(v)
            if extend(candidates & out[v] & ~(1 << v), need - 1):
                return True
            witness.pop()
        return False

    if extend(full, n):
        return tuple(witness)
    return None


def has_transitive_set(d: BitDigraph, n: int) -> bool:
    """True iff d contains a transitive set of size n."""
    return find_transitive_set(d, n) is not None


def find_digraph_independent_set(d: BitDigraph, m: int) -> Optional[tuple[int, ...]]:
    """Lexicographically least m vertices with no arc between any pair."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > d.order:
        return None
    na = d.nonadjacency_masks()
    witness: list[int] = []

    def extend(candidates: int, need: int) -> bool:
        if need == 0:
            return True
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            if candidates.bit_count() + 1 < need:
                return False
            witness.append(v)
            if extend(candidates & na[v], need - 1):
                return True
            witness.pop()
        return False

    if extend((1 << d.order) - 1, m):
        return tuple(witness)
    return None


def digraph_independent(d: BitDigraph, m: int) -> bool:
    """True iff d has m vertices with no arc between any pair, either way."""
    return find_digraph_independent_set(d, m) is not None
