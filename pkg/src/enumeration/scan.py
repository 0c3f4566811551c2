"""
Scan: Two-pointer search for omnitig intervals inside a macrotig
"""
from collections import Counter
from collections.abc import Sequence

from ..errors import StructureInvariantError
from ..graph import Classification, Graph
from ..oracle import FailureOracle
from ..tigs import Macrotig, extension_candidates


def is_omnitig_right_extension(
    g: Graph,
    oracle: FailureOracle,
    f: int,
    gg: int,
    count_self: bool = False,
    counter: Counter[str] | None = None,
) -> bool:
    """
    Given fW an omnitig with h(W) = t(gg), decide whether fW gg is one.

    `count_self` must be set when an arc of W other than f enters h(f).
    """
    out = g.out_arcs[g.tails[gg]]
    if len(out) == 1:
        return True
    hits = extension_candidates(g, oracle, f, g.tails[gg], count_self, counter)
    return hits == [gg]


def _next_same_head(g: Graph, arcs: Sequence[int]) -> list[int]:
    """next_same_head[p]: the smallest r > p with h(arcs[r]) == h(arcs[p]), else len(arcs)"""
    result = [len(arcs)] * len(arcs)
    seen: dict[int, int] = {}
    for p in range(len(arcs) - 1, -1, -1):
        h = g.heads[arcs[p]]
        result[p] = seen.get(h, len(arcs))
        seen[h] = p
    return result


def scan_macrotig(
    g: Graph,
    oracle: FailureOracle,
    macrotig: Macrotig,
    cls: Classification | None = None,
    counter: Counter[str] | None = None,
) -> list[tuple[int, int]]:
    """
    (f, g) position pairs whose univocal extensions are maximal omnitigs.

    Join candidates are join arcs of f*X, split candidates split arcs of Xg*.
    The right pointer grows while the interval stays an omnitig; after each
    emission the left pointer advances until growth is possible again.
    """
    arcs = macrotig.arcs
    last = len(arcs) - 1
    if cls is None:
        joins = [p for p in macrotig.join_positions if p < last]
        splits = [p for p in macrotig.split_positions if p > 0]
    else:
        joins = [p for p in range(last) if cls.is_join_arc[arcs[p]]]
        splits = [p for p in range(1, last + 1) if cls.is_split_arc[arcs[p]]]
    if not joins or not splits or joins[0] != 0:
        raise StructureInvariantError("macrotig must start with a join arc and contain a split arc")
    reentry = _next_same_head(g, arcs)

    def extends(fp: int, gp: int) -> bool:
        if counter is not None:
            counter["scan_steps"] += 1
        return is_omnitig_right_extension(g, oracle, arcs[fp], arcs[gp], reentry[fp] < gp, counter)

    pairs: list[tuple[int, int]] = []
    fi = 0
    si = 0
    g_pos: int | None = None
    while si < len(splits):
        while si < len(splits) and extends(joins[fi], splits[si]):
            g_pos = splits[si]
            si += 1
        if g_pos is None or g_pos < joins[fi]:
            raise StructureInvariantError(f"no split arc extends the interval from position {joins[fi]}")
        pairs.append((joins[fi], g_pos))
        while si < len(splits) and not extends(joins[fi], splits[si]):
            fi += 1
            if fi >= len(joins) or joins[fi] >= splits[si]:
                raise StructureInvariantError(
                    f"left pointer passed split position {splits[si]} without re-enabling growth"
                )
    return pairs


def leftover_bivalent_arcs(
    g: Graph,
    macrotigs: Sequence[Macrotig],
    cls: Classification,
) -> list[int]:
    """Bivalent arcs occurring in no macrotig, ascending"""
    occurs = [False] * g.arc_count
    for macrotig in macrotigs:
        for e in macrotig.arcs:
            occurs[e] = True
    return [b for b in cls.bivalent_arcs() if not occurs[b]]
