"""Exact-rational orthogonality graphs and searches for families in which
every (m+1)-subset contains an orthogonal pair.

Vectors are kept in canonical direction form: coordinates scaled to
coprime integers with the first nonzero coordinate positive, so scalar
multiples collapse to one representative and every dot product is an
exact integer.  Rational searches certify lower bounds only; they cannot
rule out real configurations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterable, Optional, Sequence

from .graphs import UGraph, bits

RatVec = tuple[int, ...]


def canonical_direction(coords: Sequence) -> RatVec:
    """Scale a nonzero rational vector to coprime integers, first nonzero
    coordinate positive.

    Accepts ints, Fractions, floats that are exact ints, strings, or
    (numerator, denominator) pairs.
    """
    fracs = []
    for c in coords:
        if isinstance(c, tuple):
            fracs.append(Fraction(c[0], c[1]))
        else:
            fracs.append(Fraction(c))
    if all(f == 0 for f in fracs):
        raise ValueError("zero vector has no direction")
    denom_lcm = 1
    for f in fracs:
        d = f.denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = [int(f * denom_lcm) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    first = next(v for v in ints if v != 0)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class VectorFamily:
    """A duplicate-free set of canonical directions in fixed dimension."""

    dimension: int
    vectors: tuple[RatVec, ...]

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.dimension:
                raise ValueError("vector dimension mismatch")
        if len(set(self.vectors)) != len(self.vectors):
            raise ValueError("duplicate directions in family")

    @classmethod
    def from_raw(cls, dimension: int, raw: Iterable[Sequence]) -> "VectorFamily":
        """Canonicalize, deduplicate (collapsing parallel vectors), sort."""
        vecs = sorted({canonical_direction(v) for v in raw})
        return cls(dimension, tuple(vecs))

    def __len__(self) -> int:
        return len(self.vectors)

    def to_json_obj(self) -> list[list[int]]:
        return [list(v) for v in self.vectors]


def dot(u: RatVec, v: RatVec) -> int:
    return sum(a * b for a, b in zip(u, v))


def ortho_graph(family: VectorFamily) -> UGraph:
    """Graph on the family with an edge exactly where the dot product is 0."""
    n = len(family)
    vecs = family.vectors
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if dot(vecs[i], vecs[j]) == 0:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return UGraph(n, adj)


def alpha_check(family: VectorFamily, m: int, *, node_budget: Optional[int] = None) -> bool:
    """True iff every (m+1)-subset of the family contains an orthogonal
    pair, i.e. the orthogonality graph has independence number <= m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    from .graphs import has_independent_set

    g = ortho_graph(family)
    return not has_independent_set(g, m + 1)


@dataclass
class AlphaSearchResult:
    family: VectorFamily
    exact: bool
    nodes: int


def alpha_lower_search(
    n: int,
    m: int,
    pool: VectorFamily,
    *,
    node_budget: Optional[int] = None,
) -> AlphaSearchResult:
    """Largest subfamily of the pool whose orthogonality graph has
    independence number <= m, by branch and bound over pool inclusion.

    Non-orthogonal is the complement relation, so the constraint is that
    the chosen set spans no (m+1)-clique of pairwise non-orthogonal
    vectors.  Vectors are considered in pool order; the bound prunes when
    the incumbent cannot be beaten.  exact is True when the search space
    was exhausted within budget.
    """
    if pool.dimension != n:
        raise ValueError("pool dimension mismatch")
    size = len(pool)
    vecs = pool.vectors
    # adjacency of the NON-orthogonality graph
    nonortho = [0] * size
    for i in range(size):
        for j in range(i + 1, size):
            if dot(vecs[i], vecs[j]) != 0:
                nonortho[i] |= 1 << j
                nonortho[j] |= 1 << i

    best_mask = 0
    best_size = 0
    nodes = 0
    budget_hit = False

    def creates_big_clique(chosen: int, v: int) -> bool:
        """Would adding v create an (m+1)-clique of non-orthogonal vectors?"""
        cand = chosen & nonortho[v]

        def extend(c: int, need: int) -> bool:
            if need == 0:
                return True
            while c:
                low = c & -c
                u = low.bit_length() - 1
                c ^= low
                if c.bit_count() + 1 < need:
                    return False
                if extend(c & nonortho[u], need - 1):
                    return True
            return False

        return extend(cand, m)

    def branch(idx: int, chosen: int, count: int) -> None:
        nonlocal best_mask, best_size, nodes, budget_hit
        if budget_hit:
            return
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            budget_hit = True
            return
        if count > best_size:
            best_size = count
            best_mask = chosen
        if idx == size or count + (size - idx) <= best_size:
            return
        if not creates_big_clique(chosen, idx):
            branch(idx + 1, chosen | (1 << idx), count + 1)
        branch(idx + 1, chosen, count)

    branch(0, 0, 0)
    family = VectorFamily(n, tuple(vecs[i] for i in bits(best_mask)))
    return AlphaSearchResult(family, not budget_hit, nodes)


def directions_of_height(n: int, height: int) -> VectorFamily:
    """All canonical directions in dimension n with entries in
    [-height, height]."""
    if height < 1:
        raise ValueError("height must be >= 1")
    seen = set()
    for coords in product(range(-height, height + 1), repeat=n):
        if any(coords):
            seen.add(canonical_direction(coords))
    return VectorFamily(n, tuple(sorted(seen)))


def standard_basis(n: int) -> VectorFamily:
    vecs = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return VectorFamily(n, vecs)


def matching_family_q2(m: int) -> VectorFamily:
    """m-1 disjoint orthogonal pairs in the plane: (1, t) and (t, -1) for
    t = 0..m-2.  Its orthogonality graph is a perfect matching, so the
    independence number is exactly m-1."""
    if m < 2:
        raise ValueError("m must be >= 2")
    raw = []
    for t in range(m - 1):
        raw.append((1, t))
        raw.append((t, -1))
    return VectorFamily.from_raw(2, raw)


@dataclass(frozen=True)
class OrthoIdentities:
    """Consistent translations between the reported quantities.

    From alpha(n, m) = a: the threshold r*(G, m+1) equals a + 1 (equal to
    the hat-r formulation), and the balanced-partition number r(G, m+2)
    equals r*(G, m+1) + 1 = a + 2.
    """

    alpha: int
    m: int
    rstar_m_plus_1: int
    rhat_m_plus_1: int
    r_m_plus_2: int


def rstar_relation(alpha_value: int, m: int) -> OrthoIdentities:
    """Arithmetic companions of a computed alpha(n, m) value."""
    if alpha_value < 0 or m < 1:
        raise ValueError("alpha value and m must be nonnegative / positive")
    return OrthoIdentities(
        alpha=alpha_value,
        m=m,
        rstar_m_plus_1=alpha_value + 1,
        rhat_m_plus_1=alpha_value + 1,
        r_m_plus_2=alpha_value + 2,
    )
