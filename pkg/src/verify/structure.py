"""
Structure: Invariant checkers over the intermediate results of a pipeline run

Every checker returns a list of human-readable violations; empty means the
invariant holds.
"""
from collections import Counter
from collections.abc import Sequence

import networkx as nx

from ..graph import Classification, Graph, Walk, classify, walk_nodes
from ..tigs import BivalentKind, Macrotig, MacronodePartition, Microtig
from .omnitig_check import check_omnitig


def check_partition(g: Graph, partition: MacronodePartition) -> list[str]:
    """Macronodes are disjoint and cover every node"""
    violations = []
    owner = [-1] * g.node_count
    for index, macronode in enumerate(partition.macronodes):
        for v in macronode.nodes:
            if owner[v] != -1:
                violations.append(f"node {v} in macronodes {owner[v]} and {index}")
            owner[v] = index
    for v in range(g.node_count):
        if owner[v] == -1:
            violations.append(f"node {v} in no macronode")
        elif owner[v] != partition.membership[v]:
            violations.append(f"node {v} membership {partition.membership[v]} but listed in {owner[v]}")
    return violations


def check_x_intersection(g: Graph, microtigs: Sequence[Microtig]) -> list[str]:
    """
    At a bivalent node, two central pairs with distinct arcs force in- and
    out-degree 2; no two central pairs share an arc.
    """
    violations = []
    by_center: dict[int, list[tuple[int, int]]] = {}
    for micro in microtigs:
        f, gg = micro.central_pair
        by_center.setdefault(g.heads[f], []).append((f, gg))
    for v, pairs in by_center.items():
        fs = Counter(f for f, _ in pairs)
        gs = Counter(gg for _, gg in pairs)
        # an arc may be f of one pair and g of another, as around a bouquet
        shared = [e for e, c in fs.items() if c > 1] + [e for e, c in gs.items() if c > 1]
        if shared:
            violations.append(f"node {v}: central pairs share arcs {sorted(shared)}")
        if len(pairs) > 1 and (g.in_degree(v) != 2 or g.out_degree(v) != 2):
            violations.append(
                f"node {v}: {len(pairs)} central pairs with d-={g.in_degree(v)}, d+={g.out_degree(v)}"
            )
    return violations


def check_y_intersection(g: Graph, microtigs: Sequence[Microtig]) -> list[str]:
    """
    Right-micro omnitigs never fork: for f g W e on a right part, replacing e by
    one of its siblings does not give an omnitig. Symmetric on left parts.
    """
    violations = []
    for micro in microtigs:
        right = micro.right_part
        for k in range(1, len(right)):
            e = right[k]
            for sibling in g.out_arcs[g.tails[e]]:
                if sibling != e and check_omnitig(g, right[:k] + (sibling,)) is None:
                    violations.append(f"right part {right[:k + 1]} forks on sibling {sibling}")
        left = micro.left_part
        for k in range(len(left) - 2, -1, -1):
            e = left[k]
            for sibling in g.in_arcs[g.heads[e]]:
                if sibling != e and check_omnitig(g, (sibling,) + left[k + 1:]) is None:
                    violations.append(f"left part {left[k:]} forks on sibling {sibling}")
    return violations


def check_omnitig_walks(g: Graph, cls: Classification, walks: Sequence[Walk]) -> list[str]:
    """No join or split arc traversed twice; no bivalent node internal twice"""
    violations = []
    for w in walks:
        if w.closed:
            continue
        counts = Counter(w.arcs)
        for e, c in counts.items():
            if c > 1 and (cls.is_join_arc[e] or cls.is_split_arc[e]):
                violations.append(f"walk {w.arcs}: join/split arc {e} traversed {c} times")
        internal = Counter(walk_nodes(g, w)[1:-1])
        for v, c in internal.items():
            if c > 1 and cls.is_bivalent(v):
                violations.append(f"walk {w.arcs}: bivalent node {v} internal {c} times")
    return violations


def check_macrotig_occurrences(macrotigs: Sequence[Macrotig], kinds: dict[int, BivalentKind]) -> list[str]:
    """Only a self-bivalent arc repeats, and only as both first and last arc"""
    violations = []
    for index, macrotig in enumerate(macrotigs):
        arcs = macrotig.arcs
        for e, c in Counter(arcs).items():
            if c == 1:
                continue
            at_ends = c == 2 and arcs[0] == e and arcs[-1] == e
            if kinds.get(e) is not BivalentKind.SELF or not at_ends:
                violations.append(f"macrotig {index}: arc {e} occurs {c} times")
    return violations


def split_order_graph(
    g: Graph,
    macrotigs: Sequence[Macrotig],
    kinds: dict[int, BivalentKind],
) -> nx.DiGraph:
    """
    g -> g' whenever a macrotig holds g P g' with P free of split arcs and g, g'
    non-sibling split arcs. Self-bivalent arcs are left out.
    """
    order = nx.DiGraph()
    for macrotig in macrotigs:
        splits = [
            macrotig.arcs[p] for p in macrotig.split_positions
            if kinds.get(macrotig.arcs[p]) is not BivalentKind.SELF
        ]
        for a, b in zip(splits, splits[1:]):
            if a != b and g.tails[a] != g.tails[b]:
                order.add_edge(a, b)
    return order


def check_split_order_acyclic(
    g: Graph,
    macrotigs: Sequence[Macrotig],
    kinds: dict[int, BivalentKind],
) -> list[str]:
    order = split_order_graph(g, macrotigs, kinds)
    if nx.is_directed_acyclic_graph(order):
        return []
    cycle = nx.find_cycle(order)
    return [f"split-arc order has a cycle through {[a for a, _ in cycle]}"]


def check_size_bounds(
    g: Graph,
    microtigs: Sequence[Microtig],
    macrotigs: Sequence[Macrotig],
) -> list[str]:
    """
    Size of the microtig and macrotig families on a compressed graph.

    A bivalent node is the center of at most two central pairs, and central
    pairs at one node share no arc. Past its central pair a right part follows
    the join-free tree of the center's macronode and may end on one bivalent
    arc; right parts at one center start on distinct arcs, so they are disjoint
    tree paths. Left parts are symmetric. Hence with k microtigs:

        k <= 2 * bivalent nodes
        total microtig length <= 2n + 2k  (tree arcs per side <= n, one bivalent arc per end)
        total macrotig length <= total microtig length  (every microtig is chained exactly once)
    """
    violations = []
    cls = classify(g)
    k = len(microtigs)
    centers = len(cls.bivalent_nodes())
    bound = 2 * g.node_count + 2 * k
    micro_total = sum(len(m.arcs) for m in microtigs)
    macro_total = sum(len(m.arcs) for m in macrotigs)
    if k > 2 * centers:
        violations.append(f"{k} microtigs around {centers} bivalent nodes")
    if micro_total > bound:
        violations.append(f"microtig total length {micro_total} exceeds {bound}")
    if macro_total > micro_total:
        violations.append(f"macrotig total length {macro_total} exceeds microtig total {micro_total}")
    return violations
