"""
Graph: Immutable directed multigraph with stable integer arc IDs
"""
from collections.abc import Iterable, Iterator, Sequence
from typing import Any

from ..errors import GraphContractError


class Graph:
    """
    Directed multigraph over nodes 0..n-1.

    - Arc IDs are dense integers 0..m-1 in construction order
    - Parallel arcs and self-loops are kept as distinct arcs
    - Adjacency lists keep arc IDs in ascending order
    - Labels are opaque side data, never read by the algorithms

    Instances are never mutated after construction.
    """

    __slots__ = ("node_count", "tails", "heads", "labels", "out_arcs", "in_arcs")

    def __init__(
        self,
        node_count: int,
        tails: Sequence[int],
        heads: Sequence[int],
        labels: Sequence[Any] | None = None,
    ):
        if len(tails) != len(heads):
            raise GraphContractError("tails and heads must have the same length")
        self.node_count = node_count
        self.tails: tuple[int, ...] = tuple(tails)
        self.heads: tuple[int, ...] = tuple(heads)
        self.labels: tuple[Any, ...] = tuple(labels) if labels is not None else (None,) * len(self.tails)

        out_arcs: list[list[int]] = [[] for _ in range(node_count)]
        in_arcs: list[list[int]] = [[] for _ in range(node_count)]
        for e, (t, h) in enumerate(zip(self.tails, self.heads)):
            out_arcs[t].append(e)
            in_arcs[h].append(e)
        self.out_arcs: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in out_arcs)
        self.in_arcs: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in in_arcs)

    @property
    def arc_count(self) -> int:
        return len(self.tails)

    def tail(self, e: int) -> int:
        return self.tails[e]

    def head(self, e: int) -> int:
        return self.heads[e]

    def out_degree(self, v: int) -> int:
        return len(self.out_arcs[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_arcs[v])

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        """Iterate over (arc_id, tail, head)"""
        for e in range(len(self.tails)):
            yield e, self.tails[e], self.heads[e]

    def reverse(self) -> "Graph":
        """The reverse graph G^R. Arc IDs are preserved, every arc flips direction."""
        return Graph(self.node_count, self.heads, self.tails, self.labels)

    def __repr__(self) -> str:
        return f"Graph(n={self.node_count}, m={self.arc_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and self.tails == other.tails
            and self.heads == other.heads
        )

    def __hash__(self) -> int:
        return hash((self.node_count, self.tails, self.heads))


def build_graph(n: int, arc_list: Iterable[Sequence[Any]]) -> Graph:
    """Build a Graph from (tail, head) or (tail, head, label) tuples, in input order"""
    if n < 0:
        raise GraphContractError(f"node count must be non-negative, got {n}")
    tails: list[int] = []
    heads: list[int] = []
    labels: list[Any] = []
    for index, arc in enumerate(arc_list):
        if len(arc) not in (2, 3):
            raise GraphContractError(f"arc {index} must be (tail, head) or (tail, head, label)")
        t, h = int(arc[0]), int(arc[1])
        if not (0 <= t < n and 0 <= h < n):
            raise GraphContractError(f"arc {index} endpoint out of range: ({t}, {h}) with n={n}")
        tails.append(t)
        heads.append(h)
        labels.append(arc[2] if len(arc) == 3 else None)
    return Graph(n, tails, heads, labels)


def bouquet(m: int) -> Graph:
    """A single node carrying m self-loops"""
    return build_graph(1, [(0, 0)] * m)


def cycle_graph(n: int) -> Graph:
    """The directed cycle 0 -> 1 -> ... -> n-1 -> 0"""
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> tuple[Graph, list[int], list[int]]:
    """
    Subgraph induced by `nodes`.

    Returns (subgraph, node_map, arc_map) where node_map[i] and arc_map[j] give the
    original node and arc IDs. Arcs keep their relative order.
    """
    node_map = sorted(set(nodes))
    local = {v: i for i, v in enumerate(node_map)}
    arc_map: list[int] = []
    arcs: list[tuple[int, int, Any]] = []
    for e, t, h in g.arcs():
        if t in local and h in local:
            arc_map.append(e)
            arcs.append((local[t], local[h], g.labels[e]))
    return build_graph(len(node_map), arcs), node_map, arc_map
