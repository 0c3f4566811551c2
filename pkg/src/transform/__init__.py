from .transform import (
    ArcOrigin,
    TransformedGraph,
    compress_pipeline,
    dedupe_expanded,
    expand_walk,
    expand_with_offsets,
    t1_constant_degree,
    t2_unitig_compress,
    t3_contract_biunivocal_arcs,
)

__all__ = [
    "ArcOrigin",
    "TransformedGraph",
    "t1_constant_degree",
    "t2_unitig_compress",
    "t3_contract_biunivocal_arcs",
    "compress_pipeline",
    "expand_walk",
    "expand_with_offsets",
    "dedupe_expanded",
]
