import pytest

from src.errors import NotStronglyConnectedError
from src.graph import build_graph
from src.oracle import Backend, BfsOracle, FastOracle, SccCacheOracle, build_oracle
from src.oracle.fast import _AncestorIndex, _dfs_forest, _loop_nesting_parent
from src.verify.sampling import random_scc_graph
from src.verify.suite import compare_backends


@pytest.mark.parametrize("backend", list(Backend))
def test_triangle_with_chord(triangle_chord, backend) -> None:
    oracle = build_oracle(triangle_chord, backend)
    # arc 2 is the only way into node 0
    assert oracle.query(0, 2)
    assert not oracle.query(1, 2)
    # the chord still reaches node 2 without arc 1
    assert oracle.query(0, 1)
    assert not oracle.query(1, 1)
    # node 1 has arc 0 as its only in-arc
    assert not oracle.query(0, 0)
    assert not oracle.query(2, 0)
    assert oracle.query(1, 3)


@pytest.mark.parametrize("backend", list(Backend))
def test_bouquet_queries_are_trivially_true(bouquet3, backend) -> None:
    oracle = build_oracle(bouquet3, backend)
    assert all(oracle.query(0, f) for f in range(3))


def test_build_oracle_rejects_disconnected(two_bouquets) -> None:
    with pytest.raises(NotStronglyConnectedError):
        build_oracle(two_bouquets, Backend.BFS)


def test_scc_cache_memoizes_per_arc(split_join) -> None:
    oracle = SccCacheOracle(split_join)
    for w in range(split_join.node_count):
        oracle.query(w, 0)
    assert oracle.scc_runs == 1
    assert oracle.queries == 3


@pytest.mark.parametrize("seed", range(10))
def test_backends_agree_on_random_graphs(seed) -> None:
    g = random_scc_graph(8 + seed, 16 + 2 * seed, seed)
    queries, disagreements = compare_backends(g)
    assert queries == g.node_count * g.arc_count
    assert disagreements == 0


def test_fast_oracle_alternate_root(figure_eight) -> None:
    reference = BfsOracle(figure_eight)
    oracle = FastOracle(figure_eight, root=2)
    for f in range(figure_eight.arc_count):
        for w in range(figure_eight.node_count):
            assert oracle.query(w, f) == reference.query(w, f)


@pytest.mark.slow
def test_backends_agree_on_many_queries() -> None:
    total = 0
    for seed in range(30):
        n = 20 + seed
        g = random_scc_graph(n, 4 * n, seed)
        queries, disagreements = compare_backends(g)
        assert disagreements == 0
        total += queries
    assert total >= 100_000


def _loop_members_by_definition(g, forest, y) -> set[int]:
    """Descendants of y that reach y through descendants of y"""
    inside = {v for v in range(g.node_count) if forest.pre[y] <= forest.pre[v] <= forest.last[y]}
    seen = {y}
    stack = [y]
    while stack:
        v = stack.pop()
        for e in g.in_arcs[v]:
            t = g.tails[e]
            if t in inside and t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


@pytest.mark.parametrize("seed", range(12))
def test_loop_nesting_forest_matches_definition(seed) -> None:
    g = random_scc_graph(15 + seed, 40 + 3 * seed, seed)
    forest = _dfs_forest(g, 0)
    parent, _ = _loop_nesting_parent(g, 0)
    loops = _AncestorIndex(g.node_count, parent)
    for y in range(g.node_count):
        members = _loop_members_by_definition(g, forest, y)
        assert {w for w in range(g.node_count) if loops.is_ancestor(y, w)} == members


def test_dfs_files_cross_arcs_under_their_lca() -> None:
    # 0 -> 1 -> 2 and 0 -> 3 -> 4, then 4 -> 2 crosses back to the first branch
    g = build_graph(5, [(0, 1), (1, 2), (0, 3), (3, 4), (4, 2), (2, 0), (4, 0)])
    forest = _dfs_forest(g, 0)
    assert forest.order == [0, 1, 2, 3, 4]
    assert forest.cross[0] == [(4, 2)]
    assert sorted(forest.back[0]) == [2, 4]


@pytest.mark.parametrize("n", [500, 1000, 2000, 4000])
def test_loop_nesting_examines_each_arc_a_bounded_number_of_times(n) -> None:
    g = random_scc_graph(n, 3 * n, n)
    _, steps = _loop_nesting_parent(g, 0)
    assert steps <= 4 * (g.node_count + g.arc_count)
    oracle = FastOracle(g)
    assert oracle.steps <= 12 * (g.node_count + g.arc_count)


def test_scc_cache_counts_one_run_of_work_per_arc(split_join) -> None:
    oracle = SccCacheOracle(split_join)
    for f in (0, 1):
        for w in range(split_join.node_count):
            oracle.query(w, f)
    assert oracle.steps == 2 * (split_join.node_count + split_join.arc_count)
