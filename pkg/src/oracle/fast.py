"""
Fast backend: O(1) failure queries from dominator trees and a loop nesting forest

Every arc e = (x, y) is subdivided by an auxiliary node so that arcs can
dominate nodes. With root s and f = (x, y):

- If the auxiliary node of f does not dominate y in G_s, s still reaches y
  without f. Since y reaches every node without f, w reaches y iff w reaches s
  without f, i.e. iff aux(f) does not dominate w in the reverse graph.
- Otherwise every path from s to y uses f, so x is the DFS parent of y and any
  node reaching y without f is dominated by y. Then w reaches y without f iff w
  lies in the loop headed by y in the loop nesting forest of G.
"""
import logging

import networkx as nx

from ..graph import Graph
from .oracle import Backend, FailureOracle

logger = logging.getLogger(__name__)


class _AncestorIndex:
    """Pre/post numbering of a forest for O(1) ancestor tests"""

    def __init__(self, size: int, parent: list[int]):
        children: list[list[int]] = [[] for _ in range(size)]
        roots: list[int] = []
        for v, p in enumerate(parent):
            if p < 0:
                roots.append(v)
            else:
                children[p].append(v)
        self.enter = [-1] * size
        self.leave = [-1] * size
        clock = 0
        for root in roots:
            stack = [(root, False)]
            while stack:
                v, done = stack.pop()
                if done:
                    self.leave[v] = clock
                    clock += 1
                    continue
                self.enter[v] = clock
                clock += 1
                stack.append((v, True))
                for c in reversed(children[v]):
                    stack.append((c, False))

    def is_ancestor(self, a: int, b: int) -> bool:
        """a is an ancestor of b or equal to it"""
        return self.enter[a] <= self.enter[b] and self.leave[b] <= self.leave[a]


def _subdivided_idom(g: Graph, root: int, reverse: bool) -> list[int]:
    """Immediate dominators in the graph with one auxiliary node n+e per arc e"""
    n = g.node_count
    flow = nx.DiGraph()
    flow.add_nodes_from(range(n + g.arc_count))
    for e, t, h in g.arcs():
        if reverse:
            t, h = h, t
        flow.add_edge(t, n + e)
        flow.add_edge(n + e, h)
    idom = nx.immediate_dominators(flow, root)
    parent = [-1] * (n + g.arc_count)
    for v, d in idom.items():
        if v != root and d != v:
            parent[v] = d
    return parent


class _DfsForest:
    """DFS numbering with non-tree arcs sorted for loop detection"""

    def __init__(self, size: int):
        self.order: list[int] = []
        self.pre = [-1] * size
        self.last = [-1] * size
        self.tree_parent = [-1] * size
        # back[y]: tails of back arcs into y; cross[l]: cross arcs (x, u) with lca l
        self.back: list[list[int]] = [[] for _ in range(size)]
        self.cross: list[list[tuple[int, int]]] = [[] for _ in range(size)]
        self.steps = 0


def _dfs_forest(g: Graph, root: int) -> _DfsForest:
    """
    Iterative DFS from root that sorts every non-tree arc as it is met.

    Back arcs are kept at their head. Forward arcs are dropped because the tree
    path already connects their endpoints through descendants. A cross arc x -> u
    is filed under lca(x, u), found with Tarjan's offline scheme: finished nodes
    are linked to their tree parent, so the nearest unfinished ancestor of u is
    the common ancestor.
    """
    n = g.node_count
    forest = _DfsForest(n)
    pre, last, tree_parent = forest.pre, forest.last, forest.tree_parent
    on_stack = [False] * n
    anc = list(range(n))

    def find_anc(v: int) -> int:
        r = v
        while anc[r] != r:
            r = anc[r]
        while anc[v] != r:
            anc[v], v = r, anc[v]
        return r

    pre[root] = 0
    forest.order.append(root)
    on_stack[root] = True
    frames = [[root, 0]]
    while frames:
        frame = frames[-1]
        v, pos = frame
        arcs = g.out_arcs[v]
        if pos < len(arcs):
            frame[1] = pos + 1
            forest.steps += 1
            u = g.heads[arcs[pos]]
            if pre[u] == -1:
                pre[u] = len(forest.order)
                forest.order.append(u)
                tree_parent[u] = v
                on_stack[u] = True
                frames.append([u, 0])
            elif on_stack[u]:
                forest.back[u].append(v)
            elif pre[u] < pre[v]:
                forest.cross[find_anc(u)].append((v, u))
        else:
            last[v] = len(forest.order) - 1
            on_stack[v] = False
            frames.pop()
            if tree_parent[v] >= 0:
                anc[v] = tree_parent[v]
    return forest


def _loop_nesting_parent(g: Graph, root: int) -> tuple[list[int], int]:
    """
    Parent of each node in the loop nesting forest of g (DFS from root), plus
    the number of elementary steps spent.

    The loop of header y holds the DFS descendants of y that reach y through
    descendants of y. Headers are processed in reverse preorder and a finished
    loop collapses into its header via union-find. A representative only keeps
    arcs that can still enter it from outside: its tree parent arc and the cross
    arcs released at their lca. Every arc it keeps is examined once, when the
    representative joins a body, and becomes internal right there, so the lists
    are dropped instead of merged.
    """
    n = g.node_count
    forest = _dfs_forest(g, root)
    steps = forest.steps
    rep = list(range(n))
    parent = [-1] * n
    entries: list[list[int]] = [[p] if p >= 0 else [] for p in forest.tree_parent]

    def find(v: int) -> int:
        r = v
        while rep[r] != r:
            r = rep[r]
        while rep[v] != r:
            rep[v], v = r, rep[v]
        return r

    for y in reversed(forest.order):
        for x, u in forest.cross[y]:
            entries[find(u)].append(x)
            steps += 1
        body: set[int] = set()
        work = [find(x) for x in forest.back[y]]
        steps += len(work)
        while work:
            z = work.pop()
            if z == y or z in body:
                continue
            body.add(z)
            for p in entries[z]:
                steps += 1
                r = find(p)
                if r != y and r not in body:
                    work.append(r)
        for z in body:
            parent[z] = y
            rep[z] = y
            entries[z] = []
    return parent, steps


class FastOracle(FailureOracle):
    """Constant-time queries after near-linear preprocessing rooted at node 0"""

    backend = Backend.FAST

    def __init__(self, graph: Graph, root: int = 0):
        super().__init__(graph)
        self.root = root
        n = graph.node_count
        m = graph.arc_count
        forward = _subdivided_idom(graph, root, reverse=False)
        backward = _subdivided_idom(graph, root, reverse=True)
        # f is a bridge for y when aux(f) is the immediate dominator of y
        self._bridge = [forward[graph.heads[e]] == n + e for e in range(m)]
        self._reverse_dom = _AncestorIndex(n + m, backward)
        loop_parent, loop_steps = _loop_nesting_parent(graph, root)
        self._loops = _AncestorIndex(n, loop_parent)
        # two subdivided graphs of n + m nodes and 2m edges, two ancestor indices
        self.steps = 2 * (n + 3 * m) + (2 * n + m) + loop_steps
        logger.debug("fast oracle: %d bridge arcs, %d preprocessing steps", sum(self._bridge), self.steps)

    def _query(self, w: int, f: int) -> bool:
        g = self.graph
        if self._bridge[f]:
            return self._loops.is_ancestor(g.heads[f], w)
        return not self._reverse_dom.is_ancestor(g.node_count + f, w)
