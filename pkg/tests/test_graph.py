import random

import pytest

from src.errors import ClosedPathError, GraphContractError
from src.graph import (
    UnivocalIndex,
    Walk,
    bouquet,
    build_graph,
    classify,
    cycle_graph,
    induced_subgraph,
    is_closed_path,
    is_strongly_connected,
    is_subwalk,
    is_walk,
    maximal_unitigs,
    nontrivial_components,
    univocal_extension,
    walk_nodes,
)
from src.verify import check_omnitig, random_scc_graph, sample_closed_arc_covering_walk


def test_build_graph_keeps_parallel_arcs_and_order() -> None:
    g = build_graph(2, [(0, 1), (0, 1), (1, 0)])
    assert g.arc_count == 3
    assert g.out_arcs[0] == (0, 1)
    assert g.in_arcs[0] == (2,)


def test_build_graph_rejects_bad_endpoint() -> None:
    with pytest.raises(GraphContractError):
        build_graph(2, [(0, 2)])


def test_empty_graph_is_allowed_but_not_strongly_connected() -> None:
    g = build_graph(0, [])
    assert g.arc_count == 0
    assert not is_strongly_connected(g)


def test_reverse_keeps_arc_ids() -> None:
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    r = g.reverse()
    assert r.tails == g.heads
    assert r.heads == g.tails
    assert r.reverse() == g


def test_classify_bouquet(bouquet2) -> None:
    cls = classify(bouquet2)
    assert cls.bivalent_nodes() == [0]
    assert cls.bivalent_arcs() == [0, 1]
    assert cls.is_compressed


def test_classify_biunivocal_chain(figure_eight) -> None:
    cls = classify(figure_eight)
    assert cls.is_biunivocal(1)
    assert not cls.is_compressed


def test_connectivity_checks(two_bouquets) -> None:
    assert not is_strongly_connected(two_bouquets)
    assert nontrivial_components(two_bouquets) == [[0], [1]]
    assert is_closed_path(cycle_graph(3))
    assert is_closed_path(bouquet(1))
    assert not is_closed_path(bouquet(2))


def test_induced_subgraph_maps_back(two_bouquets) -> None:
    sub, node_map, arc_map = induced_subgraph(two_bouquets, [1])
    assert sub == bouquet(2)
    assert node_map == [1]
    assert arc_map == [3, 4]


def test_is_walk_and_nodes(figure_eight) -> None:
    assert is_walk(figure_eight, [0, 1, 2])
    assert not is_walk(figure_eight, [0, 2])
    assert is_walk(figure_eight, Walk((0, 1), closed=True))
    assert walk_nodes(figure_eight, [2, 3, 4]) == [0, 2, 3, 0]
    assert walk_nodes(figure_eight, Walk(anchor=3)) == [3]


def test_univocal_extension_follows_unique_arcs(figure_eight) -> None:
    assert univocal_extension(figure_eight, [0]).arcs == (0, 1)
    assert univocal_extension(figure_eight, [3]).arcs == (2, 3, 4)
    index = UnivocalIndex(figure_eight)
    assert index.extension_length([3]) == 3
    assert index.first_arc([3]) == 2
    assert index.last_arc([3]) == 4


def test_univocal_extension_rejects_empty_walk(bouquet2) -> None:
    with pytest.raises(GraphContractError):
        univocal_extension(bouquet2, [])


def test_univocal_index_rejects_closed_path() -> None:
    with pytest.raises(ClosedPathError):
        UnivocalIndex(cycle_graph(3))


@pytest.mark.parametrize(
    "pattern, host, expected",
    [
        ((1, 0), Walk((0, 1), closed=True), True),
        ((1, 0), Walk((0, 1)), False),
        ((0, 1, 0, 1, 0), Walk((0, 1), closed=True), True),
        ((), Walk((0, 1)), True),
        ((2,), Walk((0, 1), closed=True), False),
    ],
)
def test_is_subwalk(pattern, host, expected) -> None:
    assert is_subwalk(pattern, host) is expected


def test_maximal_unitigs(figure_eight) -> None:
    assert [u.arcs for u in maximal_unitigs(figure_eight)] == [(0, 1), (2, 3, 4)]


def _open_random_graphs(count: int):
    for seed in range(count):
        n = 4 + seed % 7
        g = random_scc_graph(n, n + 2 + seed % 9, seed)
        if not is_closed_path(g):
            yield g


def test_univocal_extension_is_idempotent_and_safe() -> None:
    for g in _open_random_graphs(30):
        index = UnivocalIndex(g)
        for e in range(g.arc_count):
            once = univocal_extension(g, (e,))
            assert univocal_extension(g, once) == once
            assert check_omnitig(g, once) is None
            assert index.extension_length((e,)) == len(once)
            assert (index.first_arc((e,)), index.last_arc((e,))) == (once.arcs[0], once.arcs[-1])


@pytest.mark.parametrize("seed", range(10))
def test_is_subwalk_is_transitive(seed) -> None:
    rng = random.Random(seed)
    g = random_scc_graph(6, 14, seed)
    cover = sample_closed_arc_covering_walk(g, seed)
    for _ in range(20):
        # open host: nested slices
        i = rng.randrange(len(cover))
        j = rng.randrange(i, len(cover)) + 1
        middle = cover.arcs[i:j]
        p = rng.randrange(len(middle))
        inner = middle[p:rng.randrange(p, len(middle)) + 1]
        assert is_subwalk(inner, middle) and is_subwalk(middle, cover.arcs)
        assert is_subwalk(inner, cover.arcs)
        # closed host: the middle walk may wrap around
        start = rng.randrange(len(cover))
        wrapped = (cover.arcs * 3)[start:start + rng.randrange(1, 2 * len(cover))]
        p = rng.randrange(len(wrapped))
        inner = wrapped[p:rng.randrange(p, len(wrapped)) + 1]
        assert is_subwalk(wrapped, cover) and is_subwalk(inner, wrapped)
        assert is_subwalk(inner, cover)
