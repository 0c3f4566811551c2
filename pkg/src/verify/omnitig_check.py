"""
Omnitig check: Forbidden-path search straight from the omnitig definition
"""
from collections import deque
from collections.abc import Sequence

from pydantic import BaseModel, Field

from ..graph import Graph, Walk


class ForbiddenPathWitness(BaseModel):
    """A path from t(e_j) to h(e_(i-1)) avoiding e_j as first arc and e_(i-1) as last arc"""
    i: int
    j: int
    path: tuple[int, ...] = Field(..., description="Arc IDs of the forbidden path")


def forbidden_path(g: Graph, source: int, target: int, not_first: int, not_last: int) -> list[int] | None:
    """
    Shortest non-empty path (closed allowed) from source to target whose first
    arc is not `not_first` and whose last arc is not `not_last`.

    Longer paths enter the interior through G minus {source, target}, so plain
    BFS there finds them without revisiting a node. Ties go to smaller arc IDs.
    """
    for a in g.out_arcs[source]:
        if g.heads[a] == target and a != not_first and a != not_last:
            return [a]

    parent_arc: dict[int, int] = {}
    queue: deque[int] = deque()
    for a in g.out_arcs[source]:
        x = g.heads[a]
        if a == not_first or x == source or x == target or x in parent_arc:
            continue
        parent_arc[x] = a
        queue.append(x)

    while queue:
        y = queue.popleft()
        for b in g.out_arcs[y]:
            if g.heads[b] == target and b != not_last:
                path = [b]
                v = y
                while True:
                    a = parent_arc[v]
                    path.append(a)
                    if g.tails[a] == source:
                        break
                    v = g.tails[a]
                path.reverse()
                return path
        for b in g.out_arcs[y]:
            u = g.heads[b]
            if u == source or u == target or u in parent_arc:
                continue
            parent_arc[u] = b
            queue.append(u)
    return None


def _pair_witness(g: Graph, arcs: Sequence[int], i: int, j: int) -> ForbiddenPathWitness | None:
    path = forbidden_path(g, g.tails[arcs[j]], g.heads[arcs[i - 1]], arcs[j], arcs[i - 1])
    if path is None:
        return None
    return ForbiddenPathWitness(i=i, j=j, path=tuple(path))


def check_omnitig(g: Graph, w: Walk | Sequence[int]) -> ForbiddenPathWitness | None:
    """None if w is an omnitig, else the witness with smallest (i, j)"""
    arcs = w.arcs if isinstance(w, Walk) else tuple(w)
    for i in range(1, len(arcs)):
        for j in range(i, len(arcs)):
            witness = _pair_witness(g, arcs, i, j)
            if witness is not None:
                return witness
    return None


def appended_is_omnitig(g: Graph, arcs: Sequence[int]) -> bool:
    """Given arcs[:-1] is an omnitig, test only the pairs that involve the last arc"""
    j = len(arcs) - 1
    return all(_pair_witness(g, arcs, i, j) is None for i in range(1, j + 1))


def prepended_is_omnitig(g: Graph, arcs: Sequence[int]) -> bool:
    """Given arcs[1:] is an omnitig, test only the pairs that involve the first arc"""
    return all(_pair_witness(g, arcs, 1, j) is None for j in range(1, len(arcs)))


def is_maximal_omnitig(g: Graph, w: Walk | Sequence[int]) -> bool:
    """An omnitig none of whose single-arc extensions is an omnitig"""
    arcs = tuple(w.arcs if isinstance(w, Walk) else w)
    if not arcs or check_omnitig(g, arcs) is not None:
        return False
    for e in g.out_arcs[g.heads[arcs[-1]]]:
        if appended_is_omnitig(g, arcs + (e,)):
            return False
    for e in g.in_arcs[g.tails[arcs[0]]]:
        if prepended_is_omnitig(g, (e,) + arcs):
            return False
    return True
