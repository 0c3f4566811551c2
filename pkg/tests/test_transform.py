from collections import Counter

import pytest

from src.errors import ClosedPathError, ExpansionError, GraphContractError, NotCompressedError, NotStronglyConnectedError
from src.graph import bouquet, build_graph, classify, cycle_graph
from src.transform import (
    ArcOrigin,
    TransformedGraph,
    compress_pipeline,
    dedupe_expanded,
    expand_walk,
    t1_constant_degree,
    t2_unitig_compress,
    t3_contract_biunivocal_arcs,
)


def test_t2_compresses_chains_to_single_arcs(figure_eight) -> None:
    tg = t2_unitig_compress(figure_eight)
    assert tg.graph == bouquet(2)
    assert tg.arc_payload == ((0, 1), (2, 3, 4))
    assert tg.arc_origin == (ArcOrigin.T2, ArcOrigin.T2)
    assert tg.node_origin == (0,)


def test_t2_rejects_closed_path() -> None:
    with pytest.raises(ClosedPathError):
        t2_unitig_compress(cycle_graph(4))


def test_t3_contracts_biunivocal_arc() -> None:
    # arc 2 (1 -> 2) leaves a node of out-degree 1 and enters a node of in-degree 1
    g = build_graph(3, [(0, 1), (0, 1), (1, 2), (2, 0), (2, 0)])
    tg = t3_contract_biunivocal_arcs(g)
    assert tg.contracted == (2,)
    assert tg.graph.node_count == 2
    assert tg.graph.arc_count == 4
    assert classify(tg.graph).is_compressed


def test_t3_requires_t2_first(figure_eight) -> None:
    with pytest.raises(NotCompressedError):
        t3_contract_biunivocal_arcs(figure_eight)


def test_t1_bounds_degrees(bouquet3) -> None:
    tg = t1_constant_degree(bouquet3)
    g = tg.graph
    assert all(g.out_degree(v) <= 2 and g.in_degree(v) <= 2 for v in range(g.node_count))
    assert tg.synthetic_arc_count == 2
    assert all(tg.arc_payload[e] == () for e in range(g.arc_count) if tg.arc_origin[e] is ArcOrigin.T1)
    # every original arc survives exactly once
    assert sorted(x for p in tg.arc_payload for x in p) == [0, 1, 2]


def test_compress_pipeline_produces_compressed_graph(figure_eight) -> None:
    counter: Counter[str] = Counter()
    tg = compress_pipeline(figure_eight, counter=counter)
    assert classify(tg.graph).is_compressed
    assert tg.original is figure_eight
    assert counter["transform_steps"] > 0


def test_compress_pipeline_contract_errors(two_bouquets) -> None:
    with pytest.raises(GraphContractError):
        compress_pipeline(build_graph(1, []))
    with pytest.raises(NotStronglyConnectedError):
        compress_pipeline(two_bouquets)
    with pytest.raises(ClosedPathError):
        compress_pipeline(cycle_graph(2))


def test_identity_then_requires_matching_graph(bouquet2, bouquet3) -> None:
    with pytest.raises(GraphContractError):
        TransformedGraph.identity(bouquet2).then(TransformedGraph.identity(bouquet3))


def test_expand_walk_round_trip(figure_eight) -> None:
    tg = compress_pipeline(figure_eight, apply_constant_degree=False)
    assert expand_walk(tg, [0, 1]).arcs == (0, 1, 2, 3, 4)


def test_expand_walk_rejects_disconnected_arcs(split_join) -> None:
    tg = TransformedGraph.identity(split_join)
    with pytest.raises(ExpansionError):
        expand_walk(tg, [0, 1])


def test_dedupe_expanded_drops_adjacent_duplicates() -> None:
    assert dedupe_expanded([(0, 1, 2), (0, 1, 2), (0, 3, 4), (0, 1, 2)]) == [(0, 1, 2), (0, 3, 4), (0, 1, 2)]
