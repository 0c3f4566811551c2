"""
Brute force: Exhaustive maximal-omnitig enumeration for small graphs
"""
import logging

from ..errors import ClosedPathError, NotStronglyConnectedError, SizeCapError, StructureInvariantError
from ..graph import Graph, Walk, is_closed_path, is_strongly_connected, is_subwalk
from .omnitig_check import appended_is_omnitig, prepended_is_omnitig

logger = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 12
DEFAULT_MAX_ARCS = 25


def brute_force_maximal_omnitigs(
    g: Graph,
    max_nodes: int = DEFAULT_MAX_NODES,
    max_arcs: int = DEFAULT_MAX_ARCS,
) -> set[tuple[int, ...]]:
    """
    All maximal omnitigs of g as arc-ID tuples.

    Every omnitig is reached from its first arc by right extensions, since
    prefixes of omnitigs are omnitigs; extending one arc at a time only needs
    the index pairs touching the new arc.
    """
    if g.node_count > max_nodes or g.arc_count > max_arcs:
        raise SizeCapError(
            f"brute force is capped at n<={max_nodes}, m<={max_arcs}; got n={g.node_count}, m={g.arc_count}"
        )
    if g.arc_count == 0 or not is_strongly_connected(g):
        raise NotStronglyConnectedError("brute force needs a strongly connected graph with arcs")
    if is_closed_path(g):
        raise ClosedPathError("every walk of a closed path is an omnitig")

    # join and split arcs occur at most once, so this bound is never reached
    length_cap = (g.arc_count + 1) * (g.node_count + 1)

    omnitigs: set[tuple[int, ...]] = {(e,) for e in range(g.arc_count)}
    stack = sorted(omnitigs)
    maximal: list[tuple[int, ...]] = []
    while stack:
        w = stack.pop()
        if len(w) > length_cap:
            raise StructureInvariantError(f"omnitig longer than {length_cap} arcs")
        extendable = False
        for e in g.out_arcs[g.heads[w[-1]]]:
            candidate = w + (e,)
            if candidate in omnitigs or appended_is_omnitig(g, candidate):
                extendable = True
                if candidate not in omnitigs:
                    omnitigs.add(candidate)
                    stack.append(candidate)
        for e in g.in_arcs[g.tails[w[0]]]:
            candidate = (e,) + w
            if candidate in omnitigs or prepended_is_omnitig(g, candidate):
                extendable = True
                if candidate not in omnitigs:
                    omnitigs.add(candidate)
                    stack.append(candidate)
        if not extendable:
            maximal.append(w)

    result = {
        w for w in maximal
        if not any(other != w and len(other) >= len(w) and is_subwalk(w, other) for other in maximal)
    }
    logger.debug("brute force: %d omnitigs, %d maximal", len(omnitigs), len(result))
    return result


def brute_force_walks(g: Graph, **caps: int) -> list[Walk]:
    """brute_force_maximal_omnitigs as sorted Walks"""
    return [Walk(arcs) for arcs in sorted(brute_force_maximal_omnitigs(g, **caps))]
