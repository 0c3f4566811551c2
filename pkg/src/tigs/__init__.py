from .macronodes import Macronode, MacronodePartition, compute_macronodes
from .macrotigs import BivalentKind, Macrotig, all_maximal_macrotigs, classify_bivalent_arcs, merge_microtigs
from .microtigs import (
    Microtig,
    all_maximal_microtigs,
    extension_candidates,
    maximal_right_micro_omnitig,
    right_extension,
)

__all__ = [
    "Macronode",
    "MacronodePartition",
    "compute_macronodes",
    "Microtig",
    "extension_candidates",
    "right_extension",
    "maximal_right_micro_omnitig",
    "all_maximal_microtigs",
    "BivalentKind",
    "Macrotig",
    "classify_bivalent_arcs",
    "merge_microtigs",
    "all_maximal_macrotigs",
]
