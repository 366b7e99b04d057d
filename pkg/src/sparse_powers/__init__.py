"""Clustering, subcolouring and clique algorithms for powers of sparse graphs."""

from .clustering import Clustering, build_clustering, leader, quotient, quotient_ordering, verify_clustering_bound
from .cliques import apx_clique, bron_kerbosch, enumerate_maximal_cliques_semiladder, max_clique_exact, semi_ladder_index
from .graph import Graph, induced_subgraph, parse_graph, power, subdivide, universal_vertices
from .orderings import VertexOrdering, degeneracy_ordering, exact_wcol, greedy_color, wcol_of_ordering, wreach
from .subcoloring import exact_subchromatic, subcolor_via_quotient, validate_subcoloring, xi_subcolor

__all__ = [
    "Clustering",
    "Graph",
    "VertexOrdering",
    "apx_clique",
    "bron_kerbosch",
    "build_clustering",
    "degeneracy_ordering",
    "enumerate_maximal_cliques_semiladder",
    "exact_subchromatic",
    "exact_wcol",
    "greedy_color",
    "induced_subgraph",
    "leader",
    "max_clique_exact",
    "parse_graph",
    "power",
    "quotient",
    "quotient_ordering",
    "semi_ladder_index",
    "subcolor_via_quotient",
    "subdivide",
    "universal_vertices",
    "validate_subcoloring",
    "verify_clustering_bound",
    "wcol_of_ordering",
    "wreach",
    "xi_subcolor",
]
