"""
Classification: join / split / bivalent / biunivocal flags for nodes and arcs
"""
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True, slots=True)
class Classification:
    """
    Per-node and per-arc degree classes.

    A node is join if d-(v) > 1 and split if d+(v) > 1. An arc is join if its
    head is a join node and split if its tail is a split node.
    """

    is_join: tuple[bool, ...]
    is_split: tuple[bool, ...]
    is_join_arc: tuple[bool, ...]
    is_split_arc: tuple[bool, ...]

    def is_bivalent(self, v: int) -> bool:
        return self.is_join[v] and self.is_split[v]

    def is_biunivocal(self, v: int) -> bool:
        return not self.is_join[v] and not self.is_split[v]

    def is_bivalent_arc(self, e: int) -> bool:
        return self.is_join_arc[e] and self.is_split_arc[e]

    def is_biunivocal_arc(self, e: int) -> bool:
        return not self.is_join_arc[e] and not self.is_split_arc[e]

    def bivalent_nodes(self) -> list[int]:
        return [v for v in range(len(self.is_join)) if self.is_join[v] and self.is_split[v]]

    def bivalent_arcs(self) -> list[int]:
        return [e for e in range(len(self.is_join_arc)) if self.is_join_arc[e] and self.is_split_arc[e]]

    @property
    def is_compressed(self) -> bool:
        """No biunivocal nodes and no biunivocal arcs"""
        nodes_ok = all(j or s for j, s in zip(self.is_join, self.is_split))
        arcs_ok = all(j or s for j, s in zip(self.is_join_arc, self.is_split_arc))
        return nodes_ok and arcs_ok


def classify(g: Graph) -> Classification:
    is_join = tuple(g.in_degree(v) > 1 for v in range(g.node_count))
    is_split = tuple(g.out_degree(v) > 1 for v in range(g.node_count))
    return Classification(
        is_join=is_join,
        is_split=is_split,
        is_join_arc=tuple(is_join[h] for h in g.heads),
        is_split_arc=tuple(is_split[t] for t in g.tails),
    )
