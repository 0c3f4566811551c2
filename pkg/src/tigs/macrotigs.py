"""
Macrotigs: Microtigs chained on cross-bivalent arcs
"""
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from ..errors import StructureInvariantError
from ..graph import Classification, Graph, classify
from ..oracle import FailureOracle, build_oracle
from .macronodes import MacronodePartition, compute_macronodes
from .microtigs import Microtig, all_maximal_microtigs

logger = logging.getLogger(__name__)


class BivalentKind(str, Enum):
    SELF = "self"
    CROSS = "cross"


@dataclass(frozen=True)
class Macrotig:
    """
    A maximal macrotig W0 b1 W1 ... bk Wk.

    Positions index into `arcs`. The first arc is a join arc and the last a
    split arc.
    """

    arcs: tuple[int, ...]
    internal_bivalent_positions: tuple[int, ...]
    join_positions: tuple[int, ...]
    split_positions: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.arcs)


def classify_bivalent_arcs(
    g: Graph,
    partition: MacronodePartition,
    cls: Classification | None = None,
) -> dict[int, BivalentKind]:
    """
    Self or cross for every bivalent arc b.

    U(b) runs from the center of t(b)'s macronode to the center of h(b)'s, so
    comparing memberships decides the kind without walking U(b).
    """
    cls = cls or classify(g)
    kinds: dict[int, BivalentKind] = {}
    for b in cls.bivalent_arcs():
        same = partition.membership[g.tails[b]] == partition.membership[g.heads[b]]
        kinds[b] = BivalentKind.SELF if same else BivalentKind.CROSS
    return kinds


def _positions(arcs: tuple[int, ...], cls: Classification) -> tuple[tuple[int, ...], tuple[int, ...]]:
    joins = tuple(i for i, e in enumerate(arcs) if cls.is_join_arc[e])
    splits = tuple(i for i, e in enumerate(arcs) if cls.is_split_arc[e])
    return joins, splits


def merge_microtigs(
    microtigs: list[Microtig],
    kinds: dict[int, BivalentKind],
    cls: Classification,
) -> list[Macrotig]:
    """Chain microtigs W1 b and b W2 on cross-bivalent b, in microtig order"""
    starts_with: dict[int, int] = {}
    ends_with: dict[int, int] = {}
    for index, micro in enumerate(microtigs):
        first, last = micro.arcs[0], micro.arcs[-1]
        if kinds.get(first) is BivalentKind.CROSS:
            if first in starts_with:
                raise StructureInvariantError(f"two microtigs start with cross-bivalent arc {first}")
            starts_with[first] = index
        if kinds.get(last) is BivalentKind.CROSS:
            if last in ends_with:
                raise StructureInvariantError(f"two microtigs end with cross-bivalent arc {last}")
            ends_with[last] = index

    used = [False] * len(microtigs)
    macrotigs: list[Macrotig] = []
    for index, micro in enumerate(microtigs):
        if used[index] or micro.arcs[0] in ends_with:
            continue
        arcs = list(micro.arcs)
        internal: list[int] = []
        used[index] = True
        current = micro
        while current.arcs[-1] in starts_with:
            nxt = starts_with[current.arcs[-1]]
            if used[nxt]:
                raise StructureInvariantError("microtig chain closes on itself")
            used[nxt] = True
            internal.append(len(arcs) - 1)
            current = microtigs[nxt]
            arcs.extend(current.arcs[1:])
        frozen = tuple(arcs)
        joins, splits = _positions(frozen, cls)
        macrotigs.append(Macrotig(frozen, tuple(internal), joins, splits))

    if not all(used):
        raise StructureInvariantError("some microtigs form a cycle of cross-bivalent merges")
    return macrotigs


def all_maximal_macrotigs(
    g: Graph,
    oracle: FailureOracle,
    reverse_oracle: FailureOracle | None = None,
    cls: Classification | None = None,
    partition: MacronodePartition | None = None,
    microtigs: list[Microtig] | None = None,
    counter: Counter[str] | None = None,
) -> list[Macrotig]:
    cls = cls or classify(g)
    partition = partition or compute_macronodes(g, cls)
    if microtigs is None:
        if reverse_oracle is None:
            reverse_oracle = build_oracle(g.reverse(), oracle.backend)
        microtigs = all_maximal_microtigs(g, oracle, reverse_oracle, cls, counter)
    kinds = classify_bivalent_arcs(g, partition, cls)
    macrotigs = merge_microtigs(microtigs, kinds, cls)
    logger.debug("merged %d microtigs into %d macrotigs", len(microtigs), len(macrotigs))
    return macrotigs
