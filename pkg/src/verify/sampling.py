"""
Sampling: Seeded random strongly connected graphs and closed arc-covering walks
"""
import random
from collections import deque

from ..errors import GraphContractError, NotStronglyConnectedError
from ..graph import Graph, Walk, build_graph, is_strongly_connected, is_walk


def random_scc_graph(n: int, m: int, seed: int) -> Graph:
    """
    A random cycle through all n nodes plus m - n random arcs.

    Parallel arcs and self-loops are allowed. Deterministic per seed.
    """
    if n < 1 or m < n:
        raise GraphContractError(f"need m >= n >= 1, got n={n}, m={m}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    arcs = [(order[i], order[(i + 1) % n]) for i in range(n)]
    arcs.extend((rng.randrange(n), rng.randrange(n)) for _ in range(m - n))
    rng.shuffle(arcs)
    return build_graph(n, arcs)


def _shortest_path(adjacency: list[list[int]], g: Graph, source: int, target: int) -> list[int]:
    if source == target:
        return []
    parent_arc = {source: -1}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for e in adjacency[v]:
            u = g.heads[e]
            if u in parent_arc:
                continue
            parent_arc[u] = e
            if u == target:
                path = []
                while u != source:
                    a = parent_arc[u]
                    path.append(a)
                    u = g.tails[a]
                path.reverse()
                return path
            queue.append(u)
    raise NotStronglyConnectedError(f"node {target} is unreachable from node {source}")


def sample_closed_arc_covering_walk(g: Graph, seed: int) -> Walk:
    """
    A closed walk traversing every arc at least once.

    Uncovered arcs are visited in a seed-shuffled order, each reached by a
    shortest path from the current node; the walk then returns to its start.
    Neighbor order is shuffled too so that ties between shortest paths vary.
    """
    if g.arc_count == 0 or not is_strongly_connected(g):
        raise NotStronglyConnectedError("a closed arc-covering walk needs a strongly connected graph")
    rng = random.Random(seed)
    adjacency = [rng.sample(out, len(out)) for out in g.out_arcs]
    order = list(range(g.arc_count))
    rng.shuffle(order)

    start = g.tails[order[0]]
    current = start
    covered = [False] * g.arc_count
    walk: list[int] = []
    for e in order:
        if covered[e]:
            continue
        for a in _shortest_path(adjacency, g, current, g.tails[e]):
            walk.append(a)
            covered[a] = True
        walk.append(e)
        covered[e] = True
        current = g.heads[e]
    if not all(covered):
        raise GraphContractError("covering walk missed an arc")
    walk.extend(_shortest_path(adjacency, g, current, start))

    result = Walk(tuple(walk), closed=True)
    if not is_walk(g, result):
        raise GraphContractError("sampled covering walk is not a closed walk")
    return result
