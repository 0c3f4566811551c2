"""
Macronodes: Partition of a compressed graph around its bivalent nodes
"""
from collections import deque
from dataclasses import dataclass

from ..errors import NotCompressedError, StructureInvariantError
from ..graph import Classification, Graph, classify


@dataclass(frozen=True)
class Macronode:
    """
    Nodes grouped around a bivalent center.

    r_plus maps each node reached from the center by join-free arcs to its tree
    arc; r_minus maps each node reaching the center by split-free arcs to its
    tree arc. The center maps to -1 in both.
    """

    center: int
    r_plus: dict[int, int]
    r_minus: dict[int, int]

    @property
    def nodes(self) -> set[int]:
        return set(self.r_plus) | set(self.r_minus)


@dataclass(frozen=True)
class MacronodePartition:
    macronodes: list[Macronode]
    membership: list[int]

    def center_of(self, v: int) -> int:
        return self.macronodes[self.membership[v]].center


def compute_macronodes(g: Graph, cls: Classification | None = None) -> MacronodePartition:
    cls = cls or classify(g)
    if not cls.is_compressed:
        raise NotCompressedError("macronodes are defined on compressed graphs")

    membership = [-1] * g.node_count
    macronodes: list[Macronode] = []

    def grow(center: int, index: int, forward: bool) -> dict[int, int]:
        tree = {center: -1}
        queue = deque([center])
        while queue:
            v = queue.popleft()
            for e in (g.out_arcs[v] if forward else g.in_arcs[v]):
                u = g.heads[e] if forward else g.tails[e]
                # R+ stops at join nodes, R- at split nodes
                if (cls.is_join[u] if forward else cls.is_split[u]) or u in tree:
                    continue
                if membership[u] != -1:
                    raise StructureInvariantError(f"node {u} belongs to two macronodes")
                membership[u] = index
                tree[u] = e
                queue.append(u)
        return tree

    for center in cls.bivalent_nodes():
        index = len(macronodes)
        membership[center] = index
        r_plus = grow(center, index, forward=True)
        r_minus = grow(center, index, forward=False)
        macronodes.append(Macronode(center, r_plus, r_minus))

    missing = [v for v, m in enumerate(membership) if m == -1]
    if missing:
        raise StructureInvariantError(f"nodes outside every macronode: {missing[:10]}")
    return MacronodePartition(macronodes, membership)
