"""
Walks: Walk type, univocal extension, subwalk matching and unitigs
"""
from collections.abc import Sequence
from dataclasses import dataclass, field

from ..errors import ClosedPathError, GraphContractError
from .graph import Graph


@dataclass(frozen=True, slots=True)
class Walk:
    """
    A sequence of arc IDs, open or closed.

    An empty walk sits on `anchor` instead of carrying arcs.
    """

    arcs: tuple[int, ...] = field(default_factory=tuple)
    closed: bool = False
    anchor: int | None = None

    def __len__(self) -> int:
        return len(self.arcs)

    @classmethod
    def of(cls, arcs: Sequence[int], closed: bool = False) -> "Walk":
        return cls(tuple(arcs), closed)

    def reversed(self) -> "Walk":
        """The same walk read in G^R"""
        return Walk(tuple(reversed(self.arcs)), self.closed, self.anchor)


WalkLike = Walk | Sequence[int]


def _arcs(w: WalkLike) -> tuple[int, ...]:
    return w.arcs if isinstance(w, Walk) else tuple(w)


def is_walk(g: Graph, w: WalkLike, closed: bool | None = None) -> bool:
    """Consecutive arcs connect; a closed walk also returns to its start"""
    arcs = _arcs(w)
    if closed is None:
        closed = w.closed if isinstance(w, Walk) else False
    if any(not 0 <= e < g.arc_count for e in arcs):
        return False
    for a, b in zip(arcs, arcs[1:]):
        if g.heads[a] != g.tails[b]:
            return False
    if closed and arcs and g.heads[arcs[-1]] != g.tails[arcs[0]]:
        return False
    return True


def walk_nodes(g: Graph, w: WalkLike) -> list[int]:
    """Node sequence t(e0), h(e0), h(e1), ...; the anchor alone for an empty walk"""
    arcs = _arcs(w)
    if not arcs:
        anchor = w.anchor if isinstance(w, Walk) else None
        return [] if anchor is None else [anchor]
    return [g.tails[arcs[0]]] + [g.heads[e] for e in arcs]


def _forward_chain(g: Graph, v: int) -> list[int]:
    """Longest split-free path leaving v"""
    chain: list[int] = []
    while g.out_degree(v) == 1:
        e = g.out_arcs[v][0]
        chain.append(e)
        if len(chain) > g.node_count:
            raise ClosedPathError("univocal extension does not terminate: graph is a closed path")
        v = g.heads[e]
    return chain


def _backward_chain(g: Graph, v: int) -> list[int]:
    """Longest join-free path entering v, listed from its first arc"""
    chain: list[int] = []
    while g.in_degree(v) == 1:
        e = g.in_arcs[v][0]
        chain.append(e)
        if len(chain) > g.node_count:
            raise ClosedPathError("univocal extension does not terminate: graph is a closed path")
        v = g.tails[e]
    chain.reverse()
    return chain


def univocal_extension(g: Graph, w: WalkLike) -> Walk:
    """U(W) = W- W W+ for a nonempty walk W"""
    arcs = _arcs(w)
    if not arcs:
        raise GraphContractError("univocal extension needs a nonempty walk")
    left = _backward_chain(g, g.tails[arcs[0]])
    right = _forward_chain(g, g.heads[arcs[-1]])
    return Walk(tuple(left) + arcs + tuple(right))


class UnivocalIndex:
    """
    Per-node lengths and endpoint arcs of the univocal chains.

    - fwd_len[v] / fwd_last[v]: length and last arc of the longest split-free path from v
    - bwd_len[v] / bwd_first[v]: length and first arc of the longest join-free path into v

    Endpoint arcs are -1 for empty chains. Built in O(n + m).
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.fwd_len, self.fwd_last = self._chains(g.node_count, g.out_arcs, g.heads)
        self.bwd_len, self.bwd_first = self._chains(g.node_count, g.in_arcs, g.tails)

    @staticmethod
    def _chains(n: int, adjacency, other_end) -> tuple[list[int], list[int]]:
        length = [-1] * n
        end_arc = [-1] * n
        for start in range(n):
            if length[start] != -1:
                continue
            path: list[int] = []
            on_path: set[int] = set()
            v = start
            while length[v] == -1 and len(adjacency[v]) == 1:
                if v in on_path:
                    raise ClosedPathError("univocal chain closes on itself: graph is a closed path")
                on_path.add(v)
                path.append(v)
                v = other_end[adjacency[v][0]]
            if length[v] == -1:
                length[v] = 0
            for u in reversed(path):
                e = adjacency[u][0]
                nxt = other_end[e]
                length[u] = length[nxt] + 1
                end_arc[u] = e if length[nxt] == 0 else end_arc[nxt]
        return length, end_arc

    def extension_length(self, core: Sequence[int]) -> int:
        g = self.graph
        return self.bwd_len[g.tails[core[0]]] + len(core) + self.fwd_len[g.heads[core[-1]]]

    def first_arc(self, core: Sequence[int]) -> int:
        t = self.graph.tails[core[0]]
        return self.bwd_first[t] if self.bwd_len[t] else core[0]

    def last_arc(self, core: Sequence[int]) -> int:
        h = self.graph.heads[core[-1]]
        return self.fwd_last[h] if self.fwd_len[h] else core[-1]


def _failure_table(pattern: Sequence[int]) -> list[int]:
    table = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = table[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        table[i] = k
    return table


def _first_match(pattern: Sequence[int], text: Sequence[int], limit: int) -> int:
    """Start index of the first occurrence of pattern in text starting before `limit`, or -1"""
    table = _failure_table(pattern)
    k = 0
    for i, x in enumerate(text):
        while k and x != pattern[k]:
            k = table[k - 1]
        if x == pattern[k]:
            k += 1
        if k == len(pattern):
            start = i - k + 1
            return start if start < limit else -1
    return -1


def is_subwalk(w: WalkLike, host: WalkLike) -> bool:
    """
    Subwalk test. Closed hosts match modulo their length, so a pattern may wrap
    around the host any number of times.
    """
    pattern = _arcs(w)
    text = _arcs(host)
    if not pattern:
        return True
    if not text:
        return False
    if not (isinstance(host, Walk) and host.closed):
        return _first_match(pattern, text, len(text)) != -1
    repeats = -(-len(pattern) // len(text)) + 1
    return _first_match(pattern, text * repeats, len(text)) != -1


def maximal_unitigs(g: Graph) -> list[Walk]:
    """
    Maximal paths whose internal nodes have in- and out-degree 1.

    Every arc lies in exactly one unitig. A closed path yields one closed unitig.
    """
    def through(v: int) -> bool:
        return g.in_degree(v) == 1 and g.out_degree(v) == 1

    seen = [False] * g.arc_count
    unitigs: list[Walk] = []
    for e in range(g.arc_count):
        if seen[e] or through(g.tails[e]):
            continue
        arcs = [e]
        seen[e] = True
        v = g.heads[e]
        while through(v):
            nxt = g.out_arcs[v][0]
            arcs.append(nxt)
            seen[nxt] = True
            v = g.heads[nxt]
        unitigs.append(Walk(tuple(arcs)))
    # Remaining arcs sit on cycles of through-nodes
    for e in range(g.arc_count):
        if seen[e]:
            continue
        arcs = [e]
        seen[e] = True
        v = g.heads[e]
        while v != g.tails[e]:
            nxt = g.out_arcs[v][0]
            arcs.append(nxt)
            seen[nxt] = True
            v = g.heads[nxt]
        unitigs.append(Walk(tuple(arcs), closed=True))
    return unitigs
