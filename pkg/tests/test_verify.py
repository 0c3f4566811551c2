import pytest

from src.errors import ClosedPathError, GraphContractError, SizeCapError
from src.graph import Walk, bouquet, cycle_graph, is_strongly_connected, is_subwalk, is_walk
from src.verify import (
    brute_force_maximal_omnitigs,
    check_omnitig,
    forbidden_path,
    is_maximal_omnitig,
    random_scc_graph,
    sample_closed_arc_covering_walk,
)


def test_check_omnitig_bouquet2(bouquet2) -> None:
    assert check_omnitig(bouquet2, [0, 1]) is None
    witness = check_omnitig(bouquet2, [0, 1, 0])
    assert witness is not None
    assert (witness.i, witness.j, witness.path) == (1, 2, (1,))


def test_single_arc_is_always_an_omnitig(triangle_chord) -> None:
    assert all(check_omnitig(triangle_chord, [e]) is None for e in range(triangle_chord.arc_count))


def test_forbidden_path_through_interior(split_join) -> None:
    # from 0 to 1 avoiding arc 0 as first and last arc: 0 -> 2 -> 1
    assert forbidden_path(split_join, 0, 1, 0, 0) == [1, 2]
    assert forbidden_path(split_join, 0, 1, 1, 2) == [0]
    assert forbidden_path(split_join, 2, 0, 2, 3) is None


def test_witness_respects_endpoint_constraints(triangle_chord) -> None:
    walk = (0, 1, 2, 0)
    witness = check_omnitig(triangle_chord, walk)
    assert witness is not None
    assert (witness.i, witness.j, witness.path) == (2, 3, (3,))
    assert witness.path[0] != walk[witness.j]
    assert witness.path[-1] != walk[witness.i - 1]


def test_is_maximal_omnitig(bouquet2, split_join) -> None:
    assert is_maximal_omnitig(bouquet2, [0, 1])
    assert not is_maximal_omnitig(bouquet2, [0])
    assert is_maximal_omnitig(split_join, [3, 0, 3, 1, 2, 3])
    assert not is_maximal_omnitig(split_join, [0, 3, 1, 2, 3])


def test_brute_force_golden_cases(bouquet2, bouquet3, split_join, figure_eight) -> None:
    assert brute_force_maximal_omnitigs(bouquet2) == {(0, 1), (1, 0)}
    assert brute_force_maximal_omnitigs(bouquet3) == {(0,), (1,), (2,)}
    assert brute_force_maximal_omnitigs(split_join) == {(3, 0, 3, 1, 2, 3), (3, 1, 2, 3, 0, 3)}
    assert brute_force_maximal_omnitigs(figure_eight) == {(0, 1, 2, 3, 4), (2, 3, 4, 0, 1)}


def test_brute_force_results_are_maximal(triangle_chord) -> None:
    result = brute_force_maximal_omnitigs(triangle_chord)
    assert result == {(2, 0, 1, 2, 3, 2), (2, 3, 2, 0, 1, 2)}
    assert all(is_maximal_omnitig(triangle_chord, w) for w in result)


def test_brute_force_reverse_symmetry(split_join) -> None:
    forward = brute_force_maximal_omnitigs(split_join)
    backward = brute_force_maximal_omnitigs(split_join.reverse())
    assert backward == {tuple(reversed(w)) for w in forward}


def test_brute_force_caps_and_contracts(two_cycle) -> None:
    with pytest.raises(SizeCapError):
        brute_force_maximal_omnitigs(bouquet(30))
    with pytest.raises(ClosedPathError):
        brute_force_maximal_omnitigs(two_cycle)


def test_random_scc_graph_shapes() -> None:
    assert random_scc_graph(1, 3, seed=0) == bouquet(3)
    five = random_scc_graph(5, 5, seed=3)
    assert all(five.in_degree(v) == 1 and five.out_degree(v) == 1 for v in range(5))
    assert is_strongly_connected(five)
    assert is_strongly_connected(random_scc_graph(10, 25, seed=7))
    assert random_scc_graph(10, 25, seed=7) == random_scc_graph(10, 25, seed=7)


def test_random_scc_graph_rejects_infeasible() -> None:
    with pytest.raises(GraphContractError):
        random_scc_graph(5, 4, seed=0)
    with pytest.raises(GraphContractError):
        random_scc_graph(0, 0, seed=0)


def test_covering_walk_on_two_cycle(two_cycle) -> None:
    walk = sample_closed_arc_covering_walk(two_cycle, seed=0)
    assert walk.closed
    assert is_subwalk((0, 1), walk)


@pytest.mark.parametrize("seed", range(20))
def test_covering_walk_covers_every_arc(seed) -> None:
    g = random_scc_graph(6 + seed % 5, 14 + seed % 7, seed)
    walk = sample_closed_arc_covering_walk(g, seed)
    assert walk.closed
    assert is_walk(g, walk)
    assert set(walk.arcs) == set(range(g.arc_count))


def test_covering_walk_contains_cycle_graph_omnitig() -> None:
    g = cycle_graph(4)
    walk = sample_closed_arc_covering_walk(g, seed=5)
    assert is_subwalk(Walk((0, 1, 2, 3, 0, 1)), walk)
