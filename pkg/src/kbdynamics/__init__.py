"""Iterated biclique graphs: enumeration, the KB operator and behavior deciders."""

from .bicliques import (
    Aborted,
    Biclique,
    BicliqueFamily,
    enumerate_bicliques,
    is_induced_biclique,
    per_vertex_incidence,
)
from .deciders import DisconnectedGraphError, decide, decide_linear, decide_quartic
from .graph import (
    Graph,
    TwinReduction,
    are_isomorphic,
    false_twin_classes,
    from_edge_list,
    induced_subgraph,
    is_connected,
    parse_graph6,
    to_graph6,
    twin_reduce,
)
from .kb import KBResult, Trajectory, intersection_graph, kb, kb_power, oracle_classify
from .outcomes import Behavior, Kind
from .patterns import Pattern, contains_induced, has_clique_of_size

__all__ = [
    "Aborted", "Behavior", "Biclique", "BicliqueFamily", "DisconnectedGraphError",
    "Graph", "KBResult", "Kind", "Pattern", "Trajectory", "TwinReduction",
    "are_isomorphic", "contains_induced", "decide", "decide_linear", "decide_quartic",
    "enumerate_bicliques", "false_twin_classes", "from_edge_list", "has_clique_of_size",
    "induced_subgraph", "intersection_graph", "is_connected", "is_induced_biclique",
    "kb", "kb_power", "oracle_classify", "parse_graph6", "per_vertex_incidence",
    "to_graph6", "twin_reduce",
]
