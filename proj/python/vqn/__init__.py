"""Varietal hypercube network toolkit.

Thin python surface over the C++ core: graph builders, adjacency oracles,
automorphism constructions, the vertex-transitivity transport algorithm and
graph-metric analyses.
"""

from ._vqn import (
    Automorphism,
    Graph,
    base_automorphism_table,
    bfs_distances,
    build_circulant,
    build_hypercube,
    build_vq,
    classify_edge,
    compose,
    cycles_through_edge,
    dimension_neighbor,
    dot,
    edge_list,
    identity,
    is_automorphism,
    isomorphic,
    metrics,
    neighbors,
    parse_automorphism,
    phi_lift,
    refute_edge_transitivity,
    sigma0,
    sigma0_unchecked,
    sigma1,
    transport,
    verify_vertex_transitivity,
)

__all__ = [
    "Automorphism",
    "Graph",
    "base_automorphism_table",
    "bfs_distances",
    "build_circulant",
    "build_hypercube",
    "build_vq",
    "classify_edge",
    "compose",
    "cycles_through_edge",
    "dimension_neighbor",
    "dot",
    "edge_list",
    "identity",
    "is_automorphism",
    "isomorphic",
    "metrics",
    "neighbors",
    "parse_automorphism",
    "phi_lift",
    "refute_edge_transitivity",
    "sigma0",
    "sigma0_unchecked",
    "sigma1",
    "transport",
    "verify_vertex_transitivity",
]
