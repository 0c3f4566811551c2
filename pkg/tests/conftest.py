import pytest

from src.enumeration import all_maximal_omnitig_handles, materialize_all
from src.graph import Graph, bouquet, build_graph, cycle_graph


def _omnitig_set(g: Graph, **kwargs) -> set[tuple[int, ...]]:
    return {w.arcs for w in materialize_all(all_maximal_omnitig_handles(g, **kwargs))}


@pytest.fixture
def bouquet2() -> Graph:
    return bouquet(2)


@pytest.fixture
def bouquet3() -> Graph:
    return bouquet(3)


@pytest.fixture
def two_cycle() -> Graph:
    return cycle_graph(2)


@pytest.fixture
def split_join() -> Graph:
    # 0 splits into 0->1 and 0->2->1; 1 returns to 0
    return build_graph(3, [(0, 1), (0, 2), (2, 1), (1, 0)])


@pytest.fixture
def triangle_chord() -> Graph:
    return build_graph(3, [(0, 1), (1, 2), (2, 0), (0, 2)])


@pytest.fixture
def figure_eight() -> Graph:
    return build_graph(4, [(0, 1), (1, 0), (0, 2), (2, 3), (3, 0)])


@pytest.fixture
def two_bouquets() -> Graph:
    # two SCCs joined by a single arc 0 -> 1
    return build_graph(2, [(0, 0), (0, 0), (0, 1), (1, 1), (1, 1)])
