"""Ferrers partition number toolkit for bipartite graphs."""

from ._ferrers import (
    Graph,
    SizeCapExceeded,
    bounds,
    crown_partition,
    cycle_partition,
    decide_k,
    disjoint_union,
    fp_bruteforce,
    fp_exact,
    generate,
    is_ferrers,
    kmn_minus_matching_partition,
    ladder_partition,
    parse_edge_list,
    parse_matrix,
    path_partition,
    verify_partition,
)

__all__ = [
    "Graph",
    "SizeCapExceeded",
    "bounds",
    "crown_partition",
    "cycle_partition",
    "decide_k",
    "disjoint_union",
    "fp_bruteforce",
    "fp_exact",
    "generate",
    "is_ferrers",
    "kmn_minus_matching_partition",
    "ladder_partition",
    "parse_edge_list",
    "parse_matrix",
    "path_partition",
    "verify_partition",
]
