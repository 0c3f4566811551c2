"""
Microtigs: Right extensions and maximal microtigs around bivalent nodes
"""
import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from ..errors import StructureInvariantError
from ..graph import Classification, Graph, classify
from ..oracle import FailureOracle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Microtig:
    """
    W1 f g W2 around the bivalent node h(f) = t(g).

    left_bounded / right_bounded tell whether the walk ends on a bivalent arc
    rather than where extension ran out.
    """

    arcs: tuple[int, ...]
    f_index: int
    g_index: int
    left_bounded: bool
    right_bounded: bool

    @property
    def central_pair(self) -> tuple[int, int]:
        return self.arcs[self.f_index], self.arcs[self.g_index]

    @property
    def left_part(self) -> tuple[int, ...]:
        """W1 f g"""
        return self.arcs[: self.g_index + 1]

    @property
    def right_part(self) -> tuple[int, ...]:
        """f g W2"""
        return self.arcs[self.f_index:]


def extension_candidates(
    g: Graph,
    oracle: FailureOracle,
    f: int,
    node: int,
    count_self: bool,
    counter: Counter[str] | None = None,
) -> list[int]:
    """
    Out-arcs e of `node` whose head reaches h(f) in G minus f.

    f itself only counts when `count_self` holds, i.e. when another arc of the
    walk after f enters h(f); otherwise the empty path from h(f) is no witness.
    Stops after two hits since callers only need to know whether the set is a
    singleton.
    """
    hits: list[int] = []
    for e in g.out_arcs[node]:
        if e == f:
            if count_self:
                hits.append(e)
        else:
            if counter is not None:
                counter["oracle_queries"] += 1
            if oracle.query(g.heads[e], f):
                hits.append(e)
        if len(hits) > 1:
            break
    return hits


def right_extension(
    g: Graph,
    oracle: FailureOracle,
    f: int,
    w: Sequence[int] = (),
    count_self: bool | None = None,
    counter: Counter[str] | None = None,
) -> int | None:
    """The unique arc e with fWe an omnitig, or None"""
    node = g.heads[w[-1]] if w else g.heads[f]
    out = g.out_arcs[node]
    if len(out) == 1:
        return out[0]
    if count_self is None:
        target = g.heads[f]
        count_self = any(g.heads[e] == target for e in w)
    hits = extension_candidates(g, oracle, f, node, count_self, counter)
    return hits[0] if len(hits) == 1 else None


def maximal_right_micro_omnitig(
    g: Graph,
    cls: Classification,
    oracle: FailureOracle,
    f: int,
    gg: int,
    counter: Counter[str] | None = None,
) -> list[int]:
    """W2 such that f gg W2 is the maximal right-micro omnitig"""
    walk = [gg]
    target = g.heads[f]
    count_self = g.heads[gg] == target
    while not cls.is_bivalent_arc(walk[-1]):
        e = right_extension(g, oracle, f, walk, count_self=count_self, counter=counter)
        if e is None:
            break
        walk.append(e)
        count_self = count_self or g.heads[e] == target
        if counter is not None:
            counter["extension_steps"] += 1
        if len(walk) > g.arc_count + 1:
            raise StructureInvariantError("right-micro omnitig does not terminate")
    return walk[1:]


def all_maximal_microtigs(
    g: Graph,
    oracle: FailureOracle,
    reverse_oracle: FailureOracle,
    cls: Classification | None = None,
    counter: Counter[str] | None = None,
) -> list[Microtig]:
    """
    One microtig per central-micro omnitig fg, in order of bivalent node, then
    in-arc, then out-arc. Left parts come from the same routine run on G^R.
    """
    cls = cls or classify(g)
    reverse = reverse_oracle.graph
    reverse_cls = classify(reverse)
    microtigs: list[Microtig] = []
    for u in cls.bivalent_nodes():
        for f in g.in_arcs[u]:
            central = right_extension(g, oracle, f, (), count_self=False, counter=counter)
            if central is None:
                continue
            right = maximal_right_micro_omnitig(g, cls, oracle, f, central, counter)
            left = maximal_right_micro_omnitig(reverse, reverse_cls, reverse_oracle, central, f, counter)
            left.reverse()
            arcs = tuple(left) + (f, central) + tuple(right)
            microtigs.append(
                Microtig(
                    arcs=arcs,
                    f_index=len(left),
                    g_index=len(left) + 1,
                    left_bounded=cls.is_bivalent_arc(arcs[0]),
                    right_bounded=cls.is_bivalent_arc(arcs[-1]),
                )
            )
    logger.debug("found %d maximal microtigs", len(microtigs))
    return microtigs
