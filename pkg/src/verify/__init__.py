from .brute_force import brute_force_maximal_omnitigs, brute_force_walks
from .omnitig_check import (
    ForbiddenPathWitness,
    appended_is_omnitig,
    check_omnitig,
    forbidden_path,
    is_maximal_omnitig,
    prepended_is_omnitig,
)
from .sampling import random_scc_graph, sample_closed_arc_covering_walk

__all__ = [
    "ForbiddenPathWitness",
    "forbidden_path",
    "check_omnitig",
    "appended_is_omnitig",
    "prepended_is_omnitig",
    "is_maximal_omnitig",
    "brute_force_maximal_omnitigs",
    "brute_force_walks",
    "random_scc_graph",
    "sample_closed_arc_covering_walk",
]
