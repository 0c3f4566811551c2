from .enumerate import (
    all_maximal_omnitig_handles,
    all_maximal_omnitig_handles_per_scc,
    length_stats,
    materialize,
    materialize_all,
    omnitig_length_stats,
    verify_safety_by_sampling,
)
from .handles import HandleKind, LengthStats, OmnitigHandle, OmnitigRepresentation, SafetyReport
from .scan import is_omnitig_right_extension, leftover_bivalent_arcs, scan_macrotig

__all__ = [
    "HandleKind",
    "OmnitigHandle",
    "OmnitigRepresentation",
    "LengthStats",
    "SafetyReport",
    "is_omnitig_right_extension",
    "leftover_bivalent_arcs",
    "scan_macrotig",
    "all_maximal_omnitig_handles",
    "all_maximal_omnitig_handles_per_scc",
    "materialize",
    "materialize_all",
    "length_stats",
    "omnitig_length_stats",
    "verify_safety_by_sampling",
]
