from .debruijn import DeBruijnGraph, build_de_bruijn, read_fasta, spell
from .edge_list import parse_edge_list, serialize_edge_list
from .gfa import GfaLink, GfaSegment, parse_gfa_subset

__all__ = [
    "parse_edge_list",
    "serialize_edge_list",
    "GfaSegment",
    "GfaLink",
    "parse_gfa_subset",
    "DeBruijnGraph",
    "build_de_bruijn",
    "read_fasta",
    "spell",
]
