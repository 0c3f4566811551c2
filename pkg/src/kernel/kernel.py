"""
Kernel: Orchestrator for the maximal-omnitig pipeline
"""
import logging
import time
from collections import Counter
from collections.abc import Iterator
from contextlib import contextmanager

from ..enumeration.enumerate import assemble_representation, closed_path_representation
from ..enumeration.handles import OmnitigRepresentation
from ..enumeration.scan import leftover_bivalent_arcs, scan_macrotig
from ..errors import GraphContractError, NotStronglyConnectedError
from ..graph import Graph, classify, is_closed_path, is_strongly_connected
from ..oracle import Backend, build_oracle
from ..tigs import Macrotig, Microtig, all_maximal_microtigs, compute_macronodes, merge_microtigs
from ..tigs import classify_bivalent_arcs
from ..transform import TransformedGraph, compress_pipeline

logger = logging.getLogger(__name__)


class Kernel:
    """
    Runs the pipeline phase by phase on one strongly connected graph.

    The Kernel is plumbing only:
    - Compresses the graph (T2, T3, T1)
    - Builds the forward and reverse failure oracles
    - Collects microtigs, merges them into macrotigs
    - Scans macrotigs and assembles handles on the original graph
    - Records wall time per phase and step counters

    Intermediate results stay on the instance for inspection and tests.
    """

    PHASES = ("compress", "oracle", "microtigs", "macrotigs", "scan", "assemble")

    def __init__(
        self,
        graph: Graph,
        backend: Backend = Backend.SCC_CACHE,
        apply_constant_degree: bool = True,
        counter: Counter[str] | None = None,
    ):
        self.graph = graph
        self.backend = backend
        self.apply_constant_degree = apply_constant_degree
        self.counter: Counter[str] = counter if counter is not None else Counter()
        self.timings: dict[str, float] = {}

        self.transformed: TransformedGraph | None = None
        self.microtigs: list[Microtig] = []
        self.macrotigs: list[Macrotig] = []
        self.intervals: list[list[tuple[int, int]]] = []
        self.leftovers: list[int] = []

    @contextmanager
    def _phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        yield
        self.timings[name] = time.perf_counter() - start
        logger.debug("phase %s took %.4fs", name, self.timings[name])

    def run(self) -> OmnitigRepresentation:
        """Compute the representation of all maximal omnitigs"""
        g = self.graph
        if g.node_count == 0 or g.arc_count == 0:
            raise GraphContractError("the graph has no arcs")
        if not is_strongly_connected(g):
            raise NotStronglyConnectedError("the graph is not strongly connected")
        if is_closed_path(g):
            logger.info("graph is a closed path: every walk is an omnitig")
            return closed_path_representation(g)

        with self._phase("compress"):
            self.transformed = compress_pipeline(g, self.apply_constant_degree, self.counter)
        compressed = self.transformed.graph
        cls = classify(compressed)

        with self._phase("oracle"):
            oracle = build_oracle(compressed, self.backend)
            reverse_oracle = build_oracle(compressed.reverse(), self.backend)
            preprocessing = oracle.steps + reverse_oracle.steps
            self.counter["oracle_preprocessing"] += preprocessing

        with self._phase("microtigs"):
            partition = compute_macronodes(compressed, cls)
            self.microtigs = all_maximal_microtigs(compressed, oracle, reverse_oracle, cls, self.counter)

        with self._phase("macrotigs"):
            kinds = classify_bivalent_arcs(compressed, partition, cls)
            self.macrotigs = merge_microtigs(self.microtigs, kinds, cls)

        with self._phase("scan"):
            self.intervals = [
                scan_macrotig(compressed, oracle, m, counter=self.counter) for m in self.macrotigs
            ]
            self.leftovers = leftover_bivalent_arcs(compressed, self.macrotigs, cls)
        self.counter["oracle_query_work"] += oracle.steps + reverse_oracle.steps - preprocessing

        with self._phase("assemble"):
            rep = assemble_representation(
                self.transformed, self.macrotigs, self.intervals, self.leftovers, self.counter
            )
        logger.info(
            "%d maximal omnitigs from %d macrotigs and %d leftover arcs",
            len(rep.handles), len(self.macrotigs), len(self.leftovers),
        )
        return rep


def create_kernel(
    graph: Graph,
    backend: Backend | str = Backend.SCC_CACHE,
    apply_constant_degree: bool = True,
    counter: Counter[str] | None = None,
) -> Kernel:
    """Factory function to create a configured kernel"""
    return Kernel(
        graph=graph,
        backend=Backend(backend),
        apply_constant_degree=apply_constant_degree,
        counter=counter,
    )
