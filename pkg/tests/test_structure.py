import pytest

from src.corpus import builtin_samples
from src.graph import Walk, bouquet, build_graph, classify
from src.kernel import create_kernel
from src.tigs import Macronode, MacronodePartition, Macrotig, Microtig, classify_bivalent_arcs, compute_macronodes
from src.verify import random_scc_graph
from src.verify.structure import (
    check_macrotig_occurrences,
    check_omnitig_walks,
    check_partition,
    check_size_bounds,
    check_split_order_acyclic,
    check_x_intersection,
    check_y_intersection,
    split_order_graph,
)


def _violations(g) -> list[str]:
    kernel = create_kernel(g)
    rep = kernel.run()
    if rep.closed_path:
        return []
    compressed = kernel.transformed.graph
    cls = classify(compressed)
    partition = compute_macronodes(compressed, cls)
    kinds = classify_bivalent_arcs(compressed, partition, cls)
    return (
        check_partition(compressed, partition)
        + check_x_intersection(compressed, kernel.microtigs)
        + check_y_intersection(compressed, kernel.microtigs)
        + check_macrotig_occurrences(kernel.macrotigs, kinds)
        + check_split_order_acyclic(compressed, kernel.macrotigs, kinds)
        + check_size_bounds(compressed, kernel.microtigs, kernel.macrotigs)
    )


@pytest.mark.parametrize("sample", builtin_samples(), ids=lambda s: s.id)
def test_corpus_graphs_hold_invariants(sample) -> None:
    assert _violations(sample.graph()) == []


@pytest.mark.parametrize("seed", range(10))
def test_random_graphs_hold_invariants(seed) -> None:
    assert _violations(random_scc_graph(8, 18, seed)) == []


def test_partition_reports_uncovered_node() -> None:
    g = build_graph(2, [(0, 1), (1, 0)])
    partition = MacronodePartition([Macronode(0, {0: -1}, {0: -1})], membership=[0, -1])
    assert check_partition(g, partition) == ["node 1 in no macronode"]


def test_x_intersection_reports_shared_arc() -> None:
    g = bouquet(2)
    microtigs = [Microtig((0, 1), 0, 1, True, True), Microtig((0, 0), 0, 1, True, True)]
    assert any("share arcs [0]" in v for v in check_x_intersection(g, microtigs))


def test_walk_check_reports_repeated_split_arc(split_join) -> None:
    violations = check_omnitig_walks(split_join, classify(split_join), [Walk((0, 3, 0))])
    assert violations == ["walk (0, 3, 0): join/split arc 0 traversed 2 times"]


def test_walk_check_skips_closed_walks(two_cycle) -> None:
    assert check_omnitig_walks(two_cycle, classify(two_cycle), [Walk((0, 1, 0, 1), closed=True)]) == []


def test_macrotig_occurrences_flags_inner_repeat() -> None:
    assert check_macrotig_occurrences([Macrotig((0, 1, 0), (), (), ())], {}) == [
        "macrotig 0: arc 0 occurs 2 times"
    ]


def test_split_order_cycle_is_detected() -> None:
    g = build_graph(2, [(0, 1), (0, 0), (1, 0), (1, 1)])
    macrotigs = [Macrotig((0, 2), (), (), (0, 1)), Macrotig((2, 0), (), (), (0, 1))]
    order = split_order_graph(g, macrotigs, {})
    assert set(order.edges) == {(0, 2), (2, 0)}
    violations = check_split_order_acyclic(g, macrotigs, {})
    assert len(violations) == 1
    assert violations[0].startswith("split-arc order has a cycle")


def test_size_bound_violation() -> None:
    g = bouquet(2)
    assert check_size_bounds(g, [], [Macrotig((0, 1, 0, 1), (), (), ())]) == [
        "macrotig total length 4 exceeds microtig total 0"
    ]
    long = Microtig((0, 1, 0, 1, 0, 1, 0), 2, 3, True, True)
    assert check_size_bounds(g, [long], []) == ["microtig total length 7 exceeds 4"]
    short = Microtig((0, 1), 0, 1, True, True)
    assert check_size_bounds(g, [short, short, short], []) == ["3 microtigs around 1 bivalent nodes"]


def test_bouquet_microtigs_fit_the_size_bound() -> None:
    g = bouquet(2)
    microtigs = [Microtig((0, 1), 0, 1, True, True), Microtig((1, 0), 0, 1, True, True)]
    assert check_size_bounds(g, microtigs, [Macrotig((0, 1, 0), (1,), (0, 1, 2), (0, 1, 2))]) == []


def test_x_intersection_allows_an_arc_in_both_roles() -> None:
    g = bouquet(2)
    microtigs = [Microtig((0, 1), 0, 1, True, True), Microtig((1, 0), 0, 1, True, True)]
    assert check_x_intersection(g, microtigs) == []
