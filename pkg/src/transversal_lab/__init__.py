"""Exact combinatorial search toolkit for directed Ramsey numbers,
K_n-free witness constructions, balanced independent transversals, and
rational orthogonality graphs."""

__version__ = "0.1.0"

from .graphs import (
    BitDigraph,
    UGraph,
    digraph_independent,
    find_clique,
    find_digraph_independent_set,
    find_transitive_set,
    has_clique,
    has_transitive_set,
    independence_number,
    is_independent,
    max_independent_set,
)
from .canon import are_isomorphic, canonical_form, canonical_label
from .codec import decode_digraph6, decode_graph6, encode_digraph6, encode_graph6
from .ramsey import (
    DrCertificate,
    DrResult,
    RamseyTable,
    check_counterexample,
    circulant_digraph,
    dr_bounds,
    enumerate_good_classes,
    search_dr,
)
from .cache import CertificateCache
from .constructions import (
    PartitionedGraph,
    complete_bipartite,
    empty_bipartite,
    half_graph,
    henson_approx,
    layered_from_digraph,
    partition_extension_witness,
    rado_partition_witness,
    shift_graph,
    tensor,
)
from .transversal import NEstimate, TransversalResult, estimate_N, find_transversal, max_profile
from .embedding import (
    BipartitePattern,
    EmbeddingReport,
    balanced_induced_embed,
    half_graph_order,
    rich_pair_surrogate,
)
from .ortho import (
    VectorFamily,
    alpha_check,
    alpha_lower_search,
    canonical_direction,
    directions_of_height,
    ortho_graph,
    rstar_relation,
)

__all__ = [
    "BitDigraph",
    "UGraph",
    "digraph_independent",
    "find_clique",
    "find_digraph_independent_set",
    "find_transitive_set",
    "has_clique",
    "has_transitive_set",
    "independence_number",
    "is_independent",
    "max_independent_set",
    "are_isomorphic",
    "canonical_form",
    "canonical_label",
    "decode_digraph6",
    "decode_graph6",
    "encode_digraph6",
    "encode_graph6",
    "DrCertificate",
    "DrResult",
    "RamseyTable",
    "check_counterexample",
    "circulant_digraph",
    "dr_bounds",
    "enumerate_good_classes",
    "search_dr",
    "CertificateCache",
    "PartitionedGraph",
    "complete_bipartite",
    "empty_bipartite",
    "half_graph",
    "henson_approx",
    "layered_from_digraph",
    "partition_extension_witness",
    "rado_partition_witness",
    "shift_graph",
    "tensor",
    "NEstimate",
    "TransversalResult",
    "estimate_N",
    "find_transversal",
    "max_profile",
    "BipartitePattern",
    "EmbeddingReport",
    "balanced_induced_embed",
    "half_graph_order",
    "rich_pair_surrogate",
    "VectorFamily",
    "alpha_check",
    "alpha_lower_search",
    "canonical_direction",
    "directions_of_height",
    "ortho_graph",
    "rstar_relation",
]
