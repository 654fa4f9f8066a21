"""Exact dissimilarity weights of positive-weighted graphs.

Compute joint dissimilarities (minimum-weight connected subgraphs spanning
label subsets) with exact rational arithmetic, decide which tree/graph
classes can realize a given hat family, and build oracle-verified witness
graphs. All values cross the boundary as ``fractions.Fraction``.
"""

from ._core import (
    DissimError,
    Graph,
    ParseError,
    check_graph_exact,
    check_n4_internal,
    check_tree_exact,
    check_tree_leaves,
    check_tree_vertices,
    dissimilarity_vector,
    family_from_json,
    family_to_json,
    generate_family,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    hat_vector,
    implied_subset_inequalities,
    realize_graph,
    realize_tree,
    steiner_brute,
    steiner_weight,
    validate_graph,
    verify_family,
)

__all__ = [
    "DissimError",
    "Graph",
    "ParseError",
    "check_graph_exact",
    "check_n4_internal",
    "check_tree_exact",
    "check_tree_leaves",
    "check_tree_vertices",
    "dissimilarity_vector",
    "family_from_json",
    "family_to_json",
    "generate_family",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_json",
    "hat_vector",
    "implied_subset_inequalities",
    "realize_graph",
    "realize_tree",
    "steiner_brute",
    "steiner_weight",
    "validate_graph",
    "verify_family",
]
