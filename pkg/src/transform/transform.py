"""
Transform: Constant degree (T1), unitig compression (T2) and biunivocal-arc
contraction (T3), with provenance back to the original graph
"""
import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from ..errors import (
    ClosedPathError,
    ExpansionError,
    GraphContractError,
    NotCompressedError,
    NotStronglyConnectedError,
    StructureInvariantError,
)
from ..graph import Graph, Walk, classify, is_closed_path, is_strongly_connected

logger = logging.getLogger(__name__)


class ArcOrigin(str, Enum):
    """Where a transformed arc comes from"""
    ORIGINAL = "original"
    T1 = "t1"  # fan arc, expands to nothing
    T2 = "t2"  # replaces a chain through biunivocal nodes


@dataclass(frozen=True)
class TransformedGraph:
    """
    A transformed graph plus the maps back to the graph it was derived from.

    - arc_payload[e]: original arc IDs replaced by arc e (empty for T1 arcs)
    - node_origin[v]: original node merged into v, or None for T1 fan nodes
    - contracted: original arcs removed by T3, re-inserted during expansion
    """

    graph: Graph
    original: Graph
    arc_origin: tuple[ArcOrigin, ...]
    arc_payload: tuple[tuple[int, ...], ...]
    node_origin: tuple[int | None, ...]
    contracted: tuple[int, ...] = ()

    @classmethod
    def identity(cls, g: Graph) -> "TransformedGraph":
        return cls(
            graph=g,
            original=g,
            arc_origin=(ArcOrigin.ORIGINAL,) * g.arc_count,
            arc_payload=tuple((e,) for e in range(g.arc_count)),
            node_origin=tuple(range(g.node_count)),
        )

    @property
    def synthetic_arc_count(self) -> int:
        return sum(1 for o in self.arc_origin if o is ArcOrigin.T1)

    @property
    def is_identity(self) -> bool:
        return self.graph == self.original and all(
            p == (e,) for e, p in enumerate(self.arc_payload)
        )

    def then(self, outer: "TransformedGraph") -> "TransformedGraph":
        """Compose with a transformation applied to self.graph"""
        if outer.original is not self.graph:
            raise GraphContractError("outer transformation was not applied to this graph")
        origins: list[ArcOrigin] = []
        payloads: list[tuple[int, ...]] = []
        for origin, payload in zip(outer.arc_origin, outer.arc_payload):
            spliced = tuple(x for inner in payload for x in self.arc_payload[inner])
            if origin is ArcOrigin.ORIGINAL and len(payload) == 1:
                origin = self.arc_origin[payload[0]]
            payloads.append(spliced)
            origins.append(origin)
        node_origin = tuple(
            None if v is None else self.node_origin[v] for v in outer.node_origin
        )
        contracted = self.contracted + tuple(
            x for inner in outer.contracted for x in self.arc_payload[inner]
        )
        return TransformedGraph(
            graph=outer.graph,
            original=self.original,
            arc_origin=tuple(origins),
            arc_payload=tuple(payloads),
            node_origin=node_origin,
            contracted=contracted,
        )


def _tick(counter: Counter[str] | None, key: str, amount: int) -> None:
    if counter is not None:
        counter[key] += amount


def _fan_out(g: Graph) -> TransformedGraph:
    """Replace every node with d+ = k > 2 by a path v1..v(k-1) carrying its out-arcs"""
    tails = list(g.tails)
    heads = list(g.heads)
    node_origin: list[int | None] = list(range(g.node_count))
    origins = [ArcOrigin.ORIGINAL] * g.arc_count
    payloads: list[tuple[int, ...]] = [(e,) for e in range(g.arc_count)]
    next_node = g.node_count

    for v in range(g.node_count):
        out = g.out_arcs[v]
        k = len(out)
        if k <= 2:
            continue
        # path[i] is v_(i+1)
        path = [v]
        for _ in range(k - 2):
            path.append(next_node)
            node_origin.append(None)
            next_node += 1
        for i in range(k - 2):
            tails.append(path[i])
            heads.append(path[i + 1])
            origins.append(ArcOrigin.T1)
            payloads.append(())
        for i, e in enumerate(out):
            tails[e] = path[min(i, k - 2)]

    return TransformedGraph(
        graph=Graph(next_node, tails, heads),
        original=g,
        arc_origin=tuple(origins),
        arc_payload=tuple(payloads),
        node_origin=tuple(node_origin),
    )


def t1_constant_degree(g: Graph, counter: Counter[str] | None = None) -> TransformedGraph:
    """
    Bring every in- and out-degree down to at most 2.

    The out-version runs first; the in-version is the out-version applied to
    the reverse graph and reversed back.
    """
    out_stage = _fan_out(g)
    reversed_stage = _fan_out(out_stage.graph.reverse())
    in_stage = TransformedGraph(
        graph=reversed_stage.graph.reverse(),
        original=out_stage.graph,
        arc_origin=reversed_stage.arc_origin,
        arc_payload=reversed_stage.arc_payload,
        node_origin=reversed_stage.node_origin,
    )
    result = out_stage.then(in_stage)
    _tick(counter, "transform_steps", g.arc_count + result.graph.arc_count)
    logger.debug("T1 added %d fan arcs", result.synthetic_arc_count)
    return result


def t2_unitig_compress(g: Graph, counter: Counter[str] | None = None) -> TransformedGraph:
    """Replace each maximal path with biunivocal interior by a single arc"""
    if is_closed_path(g):
        raise ClosedPathError("cannot compress a closed path")
    biunivocal = [g.in_degree(v) == 1 and g.out_degree(v) == 1 for v in range(g.node_count)]
    kept = [v for v in range(g.node_count) if not biunivocal[v]]
    if not kept:
        raise ClosedPathError("every node is biunivocal")
    new_id = {v: i for i, v in enumerate(kept)}

    tails: list[int] = []
    heads: list[int] = []
    origins: list[ArcOrigin] = []
    payloads: list[tuple[int, ...]] = []
    steps = 0
    for e, t, h in g.arcs():
        if biunivocal[t]:
            continue
        chain = [e]
        v = h
        while biunivocal[v]:
            nxt = g.out_arcs[v][0]
            chain.append(nxt)
            v = g.heads[nxt]
            steps += 1
            if steps > g.arc_count:
                raise ClosedPathError("biunivocal chain does not end")
        tails.append(new_id[t])
        heads.append(new_id[v])
        origins.append(ArcOrigin.ORIGINAL if len(chain) == 1 else ArcOrigin.T2)
        payloads.append(tuple(chain))

    _tick(counter, "transform_steps", g.arc_count + g.node_count)
    return TransformedGraph(
        graph=Graph(len(kept), tails, heads),
        original=g,
        arc_origin=tuple(origins),
        arc_payload=tuple(payloads),
        node_origin=tuple(kept),
    )


def t3_contract_biunivocal_arcs(g: Graph, counter: Counter[str] | None = None) -> TransformedGraph:
    """
    Contract every arc e with d+(t(e)) = 1 and d-(h(e)) = 1, merging h(e) into t(e).

    Without biunivocal nodes these arcs are pairwise disjoint, so one pass suffices.
    """
    if any(g.in_degree(v) == 1 and g.out_degree(v) == 1 for v in range(g.node_count)):
        raise NotCompressedError("T3 requires a graph without biunivocal nodes")
    contracted = [
        e for e, t, h in g.arcs()
        if g.out_degree(t) == 1 and g.in_degree(h) == 1
    ]
    merged_into = list(range(g.node_count))
    for e in contracted:
        merged_into[g.heads[e]] = g.tails[e]
    removed = {g.heads[e] for e in contracted}
    kept = [v for v in range(g.node_count) if v not in removed]
    new_id = {v: i for i, v in enumerate(kept)}

    dropped = set(contracted)
    tails: list[int] = []
    heads: list[int] = []
    payloads: list[tuple[int, ...]] = []
    for e, t, h in g.arcs():
        if e in dropped:
            continue
        tails.append(new_id[merged_into[t]])
        heads.append(new_id[merged_into[h]])
        payloads.append((e,))

    _tick(counter, "transform_steps", g.arc_count + g.node_count)
    return TransformedGraph(
        graph=Graph(len(kept), tails, heads),
        original=g,
        arc_origin=(ArcOrigin.ORIGINAL,) * len(payloads),
        arc_payload=tuple(payloads),
        node_origin=tuple(kept),
        contracted=tuple(contracted),
    )


def compress_pipeline(
    g: Graph,
    apply_constant_degree: bool = True,
    counter: Counter[str] | None = None,
) -> TransformedGraph:
    """T2, then T3, then T1 (out- and in-version), followed by an invariant check"""
    if g.node_count == 0 or g.arc_count == 0:
        raise GraphContractError("the graph has no arcs")
    if not is_strongly_connected(g):
        raise NotStronglyConnectedError("the graph is not strongly connected")
    if is_closed_path(g):
        raise ClosedPathError("the graph is a closed path")

    stage = TransformedGraph.identity(g)
    stage = stage.then(t2_unitig_compress(stage.graph, counter))
    stage = stage.then(t3_contract_biunivocal_arcs(stage.graph, counter))
    if apply_constant_degree:
        stage = stage.then(t1_constant_degree(stage.graph, counter))

    compressed = stage.graph
    if not classify(compressed).is_compressed:
        raise StructureInvariantError("transformed graph still has biunivocal nodes or arcs")
    if apply_constant_degree and any(
        compressed.out_degree(v) > 2 or compressed.in_degree(v) > 2
        for v in range(compressed.node_count)
    ):
        raise StructureInvariantError("transformed graph has a node of degree above 2")
    logger.info(
        "compressed graph: n=%d m=%d (from n=%d m=%d)",
        compressed.node_count, compressed.arc_count, g.node_count, g.arc_count,
    )
    return stage


def _fill_gap(original: Graph, start: int, target: int, out: list[int]) -> None:
    """Follow unique out-arcs of the original graph from start until target"""
    v = start
    steps = 0
    while v != target:
        if original.out_degree(v) != 1 or steps > original.node_count:
            raise ExpansionError(f"no univocal path from node {start} to node {target}")
        e = original.out_arcs[v][0]
        out.append(e)
        v = original.heads[e]
        steps += 1


def expand_with_offsets(
    tg: TransformedGraph, arcs: Sequence[int]
) -> tuple[list[int], list[int], list[int]]:
    """
    Expand a transformed walk and record where each arc landed.

    Returns (expanded, starts, ends): arcs[p] expands to expanded[starts[p]:ends[p]]
    (an empty range for T1 arcs). Gaps left by T3 contractions are filled in.
    """
    original = tg.original
    expanded: list[int] = []
    starts: list[int] = []
    ends: list[int] = []
    for e in arcs:
        if not 0 <= e < tg.graph.arc_count:
            raise ExpansionError(f"arc {e} is not an arc of the transformed graph")
        payload = tg.arc_payload[e]
        if payload and expanded:
            _fill_gap(original, original.heads[expanded[-1]], original.tails[payload[0]], expanded)
        starts.append(len(expanded))
        expanded.extend(payload)
        ends.append(len(expanded))
    return expanded, starts, ends


def expand_walk(tg: TransformedGraph, w: Walk | Sequence[int]) -> Walk:
    """Map a walk of tg.graph back onto the original graph"""
    arcs = w.arcs if isinstance(w, Walk) else tuple(w)
    for a, b in zip(arcs, arcs[1:]):
        if tg.graph.heads[a] != tg.graph.tails[b]:
            raise ExpansionError(f"arcs {a} and {b} are not consecutive in the transformed graph")
    expanded, _, _ = expand_with_offsets(tg, arcs)
    return Walk(tuple(expanded))


def dedupe_expanded(
    omnitigs: Sequence[tuple[int, int, int]],
) -> list[tuple[int, int, int]]:
    """Drop adjacent duplicates of (macrotig_id, f_index, g_index) triples"""
    result: list[tuple[int, int, int]] = []
    for item in omnitigs:
        if not result or result[-1] != item:
            result.append(item)
    return result
