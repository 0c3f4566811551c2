"""
Oracle: "Does w reach h(f) once arc f is removed?" over a strongly connected graph
"""
import logging
import threading
from abc import ABC, abstractmethod
from collections import deque
from enum import Enum

from ..errors import NotStronglyConnectedError
from ..graph import Graph, is_strongly_connected, scc_decomposition

logger = logging.getLogger(__name__)


class Backend(str, Enum):
    BFS = "bfs"
    SCC_CACHE = "scc-cache"
    FAST = "fast"


class FailureOracle(ABC):
    """
    Failure oracle over an immutable strongly connected graph.

    query(w, f) is true iff some path leads from w to h(f) in G minus f.
    query(h(f), f) is always true (empty path). steps counts the work done
    beyond the constant cost of a query, preprocessing included.
    """

    backend: Backend

    def __init__(self, graph: Graph):
        self.graph = graph
        self.queries = 0
        self.steps = 0

    def query(self, w: int, f: int) -> bool:
        self.queries += 1
        if w == self.graph.heads[f]:
            return True
        return self._query(w, f)

    @abstractmethod
    def _query(self, w: int, f: int) -> bool:
        ...


class BfsOracle(FailureOracle):
    """Reference backend: a fresh BFS on G minus f per query"""

    backend = Backend.BFS

    def _query(self, w: int, f: int) -> bool:
        g = self.graph
        target = g.heads[f]
        seen = [False] * g.node_count
        seen[w] = True
        queue = deque([w])
        while queue:
            v = queue.popleft()
            self.steps += 1 + len(g.out_arcs[v])
            for e in g.out_arcs[v]:
                if e == f:
                    continue
                u = g.heads[e]
                if u == target:
                    return True
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        return False


class SccCacheOracle(FailureOracle):
    """
    Memoized SCC maps of G minus f, one Tarjan run per distinct f.

    Since h(f) reaches every node of G minus f, w reaches h(f) exactly when both
    share a component. Memo insertion is serialized by a lock.
    """

    backend = Backend.SCC_CACHE

    def __init__(self, graph: Graph):
        super().__init__(graph)
        self._memo: dict[int, list[int]] = {}
        self._lock = threading.Lock()
        self.scc_runs = 0

    def components_without(self, f: int) -> list[int]:
        component = self._memo.get(f)
        if component is not None:
            return component
        with self._lock:
            component = self._memo.get(f)
            if component is None:
                component = scc_decomposition(self.graph, skip_arc=f)
                self._memo[f] = component
                self.scc_runs += 1
                self.steps += self.graph.node_count + self.graph.arc_count
        return component

    def _query(self, w: int, f: int) -> bool:
        component = self.components_without(f)
        return component[w] == component[self.graph.heads[f]]


def build_oracle(graph: Graph, backend: Backend | str = Backend.SCC_CACHE) -> FailureOracle:
    """Create a failure oracle for a strongly connected graph"""
    backend = Backend(backend)
    if not is_strongly_connected(graph):
        raise NotStronglyConnectedError("the failure oracle needs a strongly connected graph")
    if backend is Backend.BFS:
        oracle: FailureOracle = BfsOracle(graph)
    elif backend is Backend.SCC_CACHE:
        oracle = SccCacheOracle(graph)
    else:
        from .fast import FastOracle
        oracle = FastOracle(graph)
    logger.debug("built %s oracle on n=%d m=%d", backend.value, graph.node_count, graph.arc_count)
    return oracle
