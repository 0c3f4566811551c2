"""
Enumerate: From macrotig intervals and leftover arcs to maximal omnitigs of the
original graph
"""
import logging
from collections import Counter
from collections.abc import Iterable, Sequence

import numpy as np

from ..errors import GraphContractError, NotStronglyConnectedError, StructureInvariantError
from ..graph import Graph, UnivocalIndex, Walk, induced_subgraph, is_closed_path, is_strongly_connected
from ..graph import is_subwalk, nontrivial_components, univocal_extension
from ..oracle import Backend
from ..tigs import Macrotig
from ..transform import TransformedGraph, dedupe_expanded, expand_with_offsets
from .handles import HandleKind, LengthStats, OmnitigHandle, OmnitigRepresentation, SafetyReport, SafetyViolation

logger = logging.getLogger(__name__)


def closed_path_representation(g: Graph) -> OmnitigRepresentation:
    """The single cycle of a closed path, starting at arc 0"""
    arcs = [0]
    v = g.heads[0]
    while v != g.tails[0]:
        e = g.out_arcs[v][0]
        arcs.append(e)
        v = g.heads[e]
    handle = OmnitigHandle(kind=HandleKind.CYCLE, length=len(arcs), arcs=tuple(arcs))
    return OmnitigRepresentation(graph=g, handles=[handle], closed_path=True)


def _first_nonempty(starts: list[int], ends: list[int], lo: int, hi: int, step: int) -> int | None:
    for p in range(lo, hi, step):
        if starts[p] < ends[p]:
            return p
    return None


def expand_intervals(
    tg: TransformedGraph,
    macrotigs: Sequence[Macrotig],
    intervals: Sequence[Sequence[tuple[int, int]]],
) -> tuple[list[tuple[int, ...]], list[tuple[int, int, int]]]:
    """
    Expand macrotigs and re-index their intervals on the original graph.

    f moves to the first non-empty expanded segment at or after it, g to the
    last one at or before it. Identical expanded macrotigs share one id.
    Returns (expanded macrotigs, (macrotig_id, f, g) triples in scan order).
    """
    expanded_ids: dict[tuple[int, ...], int] = {}
    expanded: list[tuple[int, ...]] = []
    seen: set[tuple[int, int, int]] = set()
    triples: list[tuple[int, int, int]] = []
    for macrotig, pairs in zip(macrotigs, intervals):
        arcs, starts, ends = expand_with_offsets(tg, macrotig.arcs)
        key = tuple(arcs)
        local: list[tuple[int, int, int]] = []
        for f, g in pairs:
            fp = _first_nonempty(starts, ends, f, g + 1, 1)
            gp = _first_nonempty(starts, ends, g, f - 1, -1)
            if fp is None or gp is None:
                logger.debug("interval (%d, %d) expands to an empty walk; skipped", f, g)
                continue
            local.append((-1, starts[fp], ends[gp] - 1))
        if not local:
            continue
        if key not in expanded_ids:
            expanded_ids[key] = len(expanded)
            expanded.append(key)
        mid = expanded_ids[key]
        for _, f, g in dedupe_expanded(local):
            triple = (mid, f, g)
            if triple not in seen:
                seen.add(triple)
                triples.append(triple)
    return expanded, triples


def _distinct(
    g: Graph,
    index: UnivocalIndex,
    handles: list[OmnitigHandle],
    macrotigs: list[tuple[int, ...]],
) -> list[OmnitigHandle]:
    """
    Drop handles materializing to the same walk.

    Handles are grouped by (first arc, last arc, length) of their univocal
    extension; only groups with more than one member are materialized.
    """
    groups: dict[tuple[int, int, int], list[int]] = {}
    for i, handle in enumerate(handles):
        core = _core(handle, macrotigs)
        key = (index.first_arc(core), index.last_arc(core), handle.length)
        groups.setdefault(key, []).append(i)
    dropped: set[int] = set()
    for members in groups.values():
        if len(members) < 2:
            continue
        kept: set[tuple[int, ...]] = set()
        for i in members:
            walk = univocal_extension(g, _core(handles[i], macrotigs)).arcs
            if walk in kept:
                dropped.add(i)
            else:
                kept.add(walk)
    if dropped:
        logger.debug("dropped %d duplicate handles", len(dropped))
    return [h for i, h in enumerate(handles) if i not in dropped]


def _drop_subwalks(
    g: Graph,
    handles: list[OmnitigHandle],
    macrotigs: list[tuple[int, ...]],
    counter: Counter[str] | None = None,
) -> list[OmnitigHandle]:
    """
    Drop handles whose walk is a proper subwalk of another handle's walk.

    Fan arcs of the constant-degree transform expand to nothing, so an interval
    that was maximal on the transformed graph can land strictly inside another
    output once mapped back. Every walk is materialized and looked up through
    the positions of its first arc in the other walks.
    """
    walks = [univocal_extension(g, _core(h, macrotigs)).arcs for h in handles]
    positions: dict[int, list[tuple[int, int]]] = {}
    for j, walk in enumerate(walks):
        for p, e in enumerate(walk):
            positions.setdefault(e, []).append((j, p))
    dropped: set[int] = set()
    for i, walk in enumerate(walks):
        size = len(walk)
        for j, p in positions[walk[0]]:
            if counter is not None:
                counter["subwalk_checks"] += 1
            other = walks[j]
            if j == i or j in dropped or len(other) - p < size:
                continue
            if other[p:p + size] == walk and len(other) > size:
                dropped.add(i)
                break
    if dropped:
        logger.debug("dropped %d handles contained in other outputs", len(dropped))
    return [h for i, h in enumerate(handles) if i not in dropped]


def _core(handle: OmnitigHandle, macrotigs: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    if handle.kind is HandleKind.INTERVAL:
        return macrotigs[handle.macrotig_id][handle.f_index:handle.g_index + 1]
    return handle.arcs


def assemble_representation(
    tg: TransformedGraph,
    macrotigs: Sequence[Macrotig],
    intervals: Sequence[Sequence[tuple[int, int]]],
    leftovers: Sequence[int],
    counter: Counter[str] | None = None,
) -> OmnitigRepresentation:
    """Build handles on the original graph from the transformed-graph results"""
    g = tg.original
    index = UnivocalIndex(g)
    expanded, triples = expand_intervals(tg, macrotigs, intervals)

    handles: list[OmnitigHandle] = []
    for mid, f, gi in triples:
        core = expanded[mid][f:gi + 1]
        handles.append(
            OmnitigHandle(
                kind=HandleKind.INTERVAL,
                length=index.extension_length(core),
                macrotig_id=mid,
                f_index=f,
                g_index=gi,
            )
        )
    leftover_handles: list[OmnitigHandle] = []
    for b in leftovers:
        payload = tg.arc_payload[b]
        if not payload:
            raise StructureInvariantError(f"bivalent arc {b} has an empty payload")
        leftover_handles.append(
            OmnitigHandle(
                kind=HandleKind.LEFTOVER,
                length=index.extension_length(payload),
                arc_id=b,
                arcs=payload,
            )
        )
    leftover_handles.sort(key=lambda h: h.arcs[0])
    handles.extend(leftover_handles)

    handles = _distinct(g, index, handles, expanded)
    if tg.synthetic_arc_count:
        handles = _drop_subwalks(g, handles, expanded, counter)
    if counter is not None:
        counter["handles"] += len(handles)
    return OmnitigRepresentation(
        graph=g,
        handles=handles,
        macrotigs=expanded,
        compressed_macrotigs=list(macrotigs),
        transformed=tg,
        index=index,
    )


def all_maximal_omnitig_handles(
    g: Graph,
    backend: Backend | str = Backend.SCC_CACHE,
    apply_constant_degree: bool = True,
    counter: Counter[str] | None = None,
) -> OmnitigRepresentation:
    """O(m) representation of all maximal omnitigs of a strongly connected graph"""
    from ..kernel import create_kernel

    kernel = create_kernel(g, backend=backend, apply_constant_degree=apply_constant_degree, counter=counter)
    return kernel.run()


def all_maximal_omnitig_handles_per_scc(
    g: Graph,
    backend: Backend | str = Backend.SCC_CACHE,
    apply_constant_degree: bool = True,
) -> list[tuple[int, list[int], list[int], OmnitigRepresentation]]:
    """
    Run the pipeline on every SCC that has an arc.

    Returns (component, node_map, arc_map, representation) where the maps lead
    from component-local IDs back to g.
    """
    results = []
    for component, nodes in enumerate(nontrivial_components(g)):
        sub, node_map, arc_map = induced_subgraph(g, nodes)
        results.append((component, node_map, arc_map, all_maximal_omnitig_handles(sub, backend, apply_constant_degree)))
    return results


def materialize(rep: OmnitigRepresentation, handle: OmnitigHandle) -> Walk:
    """The maximal omnitig a handle stands for, on the original graph"""
    if handle.kind is HandleKind.CYCLE:
        return Walk(handle.arcs, closed=True)
    return univocal_extension(rep.graph, _core(handle, rep.macrotigs))


def materialize_all(rep: OmnitigRepresentation) -> list[Walk]:
    return [materialize(rep, h) for h in rep.handles]


def length_stats(lengths: Iterable[int]) -> LengthStats:
    values = np.fromiter(lengths, dtype=np.int64)
    if values.size == 0:
        return LengthStats()
    return LengthStats(
        count=int(values.size),
        min=int(values.min()),
        max=int(values.max()),
        mean=float(values.mean()),
        total=int(values.sum()),
    )


def omnitig_length_stats(rep: OmnitigRepresentation) -> LengthStats:
    """Statistics from cached handle lengths; nothing is materialized"""
    return length_stats(h.length for h in rep.handles)


def verify_safety_by_sampling(
    g: Graph,
    omnitigs: Sequence[Walk],
    samples: int,
    seed: int = 0,
) -> SafetyReport:
    """Every omnitig must be a circular subwalk of every sampled closed arc-covering walk"""
    from ..verify.sampling import sample_closed_arc_covering_walk

    if g.arc_count == 0 or not is_strongly_connected(g):
        raise NotStronglyConnectedError("safety sampling needs a strongly connected graph")
    if is_closed_path(g):
        raise GraphContractError("safety sampling is not defined on a closed path")
    report = SafetyReport(samples=samples, omnitigs=len(omnitigs))
    for i in range(samples):
        cover = sample_closed_arc_covering_walk(g, seed + i)
        for walk in omnitigs:
            if not is_subwalk(walk, cover):
                report.violations.append(
                    SafetyViolation(omnitig=walk.arcs, sample_index=i, sample=cover.arcs)
                )
    return report
