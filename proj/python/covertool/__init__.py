"""Partial t-cover ideals of graphs and the associated primes of their powers."""

from ._covertool import (
    CovertoolError,
    Graph,
    Hypergraph,
    MonomialIdeal,
    alexander_dual,
    ass_of_power,
    astab_star,
    astab_tree,
    build_gap_family,
    chromatic_number,
    generalized_edge_ideal,
    graph_stability,
    hypergraph_cover_ideal,
    max_ideal_in_ass_star,
    parse_graph,
    parse_hypergraph,
    partial_cover_ideal,
    path_graph,
    predict_ass_star,
    predict_ass_tree,
    star_generators,
    star_graph,
    star_witness,
    verify_gap,
)

__all__ = [
    "CovertoolError",
    "Graph",
    "Hypergraph",
    "MonomialIdeal",
    "alexander_dual",
    "ass_of_power",
    "astab_star",
    "astab_tree",
    "build_gap_family",
    "chromatic_number",
    "generalized_edge_ideal",
    "graph_stability",
    "hypergraph_cover_ideal",
    "max_ideal_in_ass_star",
    "parse_graph",
    "parse_hypergraph",
    "partial_cover_ideal",
    "path_graph",
    "predict_ass_star",
    "predict_ass_tree",
    "star_generators",
    "star_graph",
    "star_witness",
    "verify_gap",
]
