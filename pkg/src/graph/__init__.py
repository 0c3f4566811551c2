from .classify import Classification, classify
from .connectivity import is_closed_path, is_strongly_connected, nontrivial_components, scc_decomposition
from .graph import Graph, bouquet, build_graph, cycle_graph, induced_subgraph
from .walks import (
    UnivocalIndex,
    Walk,
    is_subwalk,
    is_walk,
    maximal_unitigs,
    univocal_extension,
    walk_nodes,
)

__all__ = [
    "Graph",
    "build_graph",
    "bouquet",
    "cycle_graph",
    "induced_subgraph",
    "Classification",
    "classify",
    "scc_decomposition",
    "is_strongly_connected",
    "nontrivial_components",
    "is_closed_path",
    "Walk",
    "UnivocalIndex",
    "univocal_extension",
    "is_subwalk",
    "is_walk",
    "walk_nodes",
    "maximal_unitigs",
]
