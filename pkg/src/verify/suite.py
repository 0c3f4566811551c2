"""
Suite: Seeded equivalence and invariant sweep over random strongly connected graphs

Per seed the pipeline is checked against brute force and against itself without
constant-degree fans. The reverse graph, the other oracle backends and sampled
covering walks are compared as well, every output goes through the maximality
checker, and the intermediate results through the structural invariants. The
named graphs of the corpus are checked against their recorded answers.
"""
import logging
import random
import time
from collections.abc import Callable, Iterable

from pydantic import BaseModel, Field

from ..assembly.edge_list import serialize_edge_list
from ..corpus import Corpus, GraphSample
from ..enumeration import (
    all_maximal_omnitig_handles,
    length_stats,
    materialize_all,
    omnitig_length_stats,
    verify_safety_by_sampling,
)
from ..errors import OmnitigError
from ..graph import Graph, Walk, classify, is_closed_path, is_subwalk
from ..kernel import create_kernel
from ..oracle import Backend, BfsOracle, FailureOracle, FastOracle, SccCacheOracle
from ..tigs import classify_bivalent_arcs, compute_macronodes
from .brute_force import DEFAULT_MAX_ARCS, DEFAULT_MAX_NODES, brute_force_maximal_omnitigs
from .omnitig_check import is_maximal_omnitig
from .sampling import random_scc_graph, sample_closed_arc_covering_walk
from .structure import (
    check_macrotig_occurrences,
    check_omnitig_walks,
    check_partition,
    check_size_bounds,
    check_split_order_acyclic,
    check_x_intersection,
    check_y_intersection,
)

logger = logging.getLogger(__name__)


class SeedResult(BaseModel):
    """Outcome of every check on one seeded graph"""
    seed: int
    nodes: int
    arcs: int
    closed_path: bool = False
    omnitigs: int = 0
    missing: list[tuple[int, ...]] = Field(default_factory=list, description="Brute-force omnitigs the pipeline missed")
    extra: list[tuple[int, ...]] = Field(default_factory=list, description="Pipeline omnitigs brute force rejects")
    not_maximal: list[tuple[int, ...]] = Field(default_factory=list, description="Outputs the maximality checker rejects")
    round_trip_mismatch: bool = False
    stats_mismatch: bool = False
    reverse_mismatch: bool = False
    oracle_queries: int = 0
    backend_disagreements: int = 0
    safety_violations: int = 0
    rejected_extensions: int = Field(0, description="Single-arc extensions of maximal omnitigs")
    witnessed_rejections: int = Field(0, description="Rejected extensions missing from some sampled walk")
    invariant_violations: list[str] = Field(default_factory=list)
    counterexample: str | None = Field(None, description="Edge list of the graph when a check failed")

    @property
    def passed(self) -> bool:
        return not (
            self.missing
            or self.extra
            or self.not_maximal
            or self.round_trip_mismatch
            or self.stats_mismatch
            or self.reverse_mismatch
            or self.backend_disagreements
            or self.safety_violations
            or self.invariant_violations
        )


class SampleResult(BaseModel):
    """Outcome of one corpus graph against its recorded answers"""
    sample_id: str
    omnitigs: int = 0
    problems: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.problems


class VerificationSummary(BaseModel):
    seeds: int
    passed: int = 0
    failed_seeds: list[int] = Field(default_factory=list)
    closed_paths: int = 0
    omnitigs: int = 0
    oracle_queries: int = 0
    witnessed_rejection_rate: float = Field(
        1.0, description="Share of rejected extensions a sampled walk refutes (report only)"
    )
    corpus_samples: int = 0
    failed_samples: list[str] = Field(default_factory=list)
    elapsed_seconds: float = 0.0
    results: list[SeedResult] = Field(default_factory=list)
    sample_results: list[SampleResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failed_seeds and not self.failed_samples


def seeded_graph(seed: int, max_nodes: int = DEFAULT_MAX_NODES, max_arcs: int = DEFAULT_MAX_ARCS) -> Graph:
    """The random graph a verification seed stands for"""
    rng = random.Random(seed)
    n = rng.randint(1, max_nodes)
    m = rng.randint(n, max_arcs)
    return random_scc_graph(n, m, seed)


def compare_backends(g: Graph, backends: Iterable[Callable[[Graph], FailureOracle]] | None = None) -> tuple[int, int]:
    """All (w, f) queries through every backend; returns (queries, disagreements)"""
    reference = BfsOracle(g)
    others = [make(g) for make in (backends or (SccCacheOracle, FastOracle))]
    queries = 0
    disagreements = 0
    for f in range(g.arc_count):
        for w in range(g.node_count):
            expected = reference.query(w, f)
            queries += 1
            for oracle in others:
                if oracle.query(w, f) != expected:
                    disagreements += 1
                    logger.debug("%s disagrees on query(%d, %d)", type(oracle).__name__, w, f)
    return queries, disagreements


def _walk_set(walks: Iterable[Walk]) -> set[tuple[int, ...]]:
    return {w.arcs for w in walks}


def _structural_violations(kernel) -> list[str]:
    compressed = kernel.transformed.graph
    cls = classify(compressed)
    partition = compute_macronodes(compressed, cls)
    kinds = classify_bivalent_arcs(compressed, partition, cls)
    return (
        check_partition(compressed, partition)
        + check_x_intersection(compressed, kernel.microtigs)
        + check_y_intersection(compressed, kernel.microtigs)
        + check_macrotig_occurrences(kernel.macrotigs, kinds)
        + check_split_order_acyclic(compressed, kernel.macrotigs, kinds)
        + check_size_bounds(compressed, kernel.microtigs, kernel.macrotigs)
    )


def run_seed(
    seed: int,
    backend: Backend | str = Backend.SCC_CACHE,
    safety_samples: int = 20,
    max_nodes: int = DEFAULT_MAX_NODES,
    max_arcs: int = DEFAULT_MAX_ARCS,
) -> SeedResult:
    g = seeded_graph(seed, max_nodes, max_arcs)
    result = SeedResult(seed=seed, nodes=g.node_count, arcs=g.arc_count)
    if is_closed_path(g):
        result.closed_path = True
        rep = all_maximal_omnitig_handles(g, backend)
        if len(rep) != 1 or not rep.closed_path:
            result.invariant_violations.append("closed path did not yield a single cycle handle")
        return result

    kernel = create_kernel(g, backend=backend)
    rep = kernel.run()
    walks = materialize_all(rep)
    got = _walk_set(walks)
    expected = brute_force_maximal_omnitigs(g, max_nodes, max_arcs)
    result.omnitigs = len(got)
    result.missing = sorted(expected - got)
    result.extra = sorted(got - expected)
    result.not_maximal = [w.arcs for w in walks if not is_maximal_omnitig(g, w)]

    without_fans = all_maximal_omnitig_handles(g, backend, apply_constant_degree=False)
    result.round_trip_mismatch = _walk_set(materialize_all(without_fans)) != got
    result.stats_mismatch = omnitig_length_stats(rep) != length_stats(len(w) for w in walks)
    reverse_expected = {tuple(reversed(w)) for w in expected}
    result.reverse_mismatch = brute_force_maximal_omnitigs(g.reverse(), max_nodes, max_arcs) != reverse_expected

    result.oracle_queries, result.backend_disagreements = compare_backends(kernel.transformed.graph)
    result.invariant_violations = _structural_violations(kernel) + check_omnitig_walks(g, classify(g), walks)

    safety = verify_safety_by_sampling(g, walks, safety_samples, seed=seed)
    result.safety_violations = len(safety.violations)

    covers = [sample_closed_arc_covering_walk(g, seed + i) for i in range(safety_samples)]
    for w in walks:
        for e in g.out_arcs[g.heads[w.arcs[-1]]]:
            result.rejected_extensions += 1
            extended = w.arcs + (e,)
            if any(not is_subwalk(extended, cover) for cover in covers):
                result.witnessed_rejections += 1

    if not result.passed:
        result.counterexample = serialize_edge_list(g, comment=f"seed {seed}")
    return result


def check_sample(
    sample: GraphSample,
    backend: Backend | str = Backend.SCC_CACHE,
    max_nodes: int = DEFAULT_MAX_NODES,
    max_arcs: int = DEFAULT_MAX_ARCS,
) -> SampleResult:
    """Compare the pipeline on a corpus graph with its recorded count and walks"""
    result = SampleResult(sample_id=sample.id)
    try:
        g = sample.graph()
        rep = all_maximal_omnitig_handles(g, backend)
    except OmnitigError as exc:
        result.problems.append(f"pipeline failed: {exc}")
        return result
    walks = materialize_all(rep)
    got = _walk_set(walks)
    result.omnitigs = len(walks)
    if sample.expected_count is not None and len(walks) != sample.expected_count:
        result.problems.append(f"{len(walks)} omnitigs, expected {sample.expected_count}")
    if rep.closed_path != sample.closed_path:
        result.problems.append(f"closed path {rep.closed_path}, expected {sample.closed_path}")
    if "omnitigs" in sample.metadata:
        expected = {tuple(w) for w in sample.metadata["omnitigs"]}
        if got != expected:
            result.problems.append(f"walks {sorted(got)} differ from recorded {sorted(expected)}")
    if rep.closed_path:
        return result
    for w in walks:
        if not is_maximal_omnitig(g, w):
            result.problems.append(f"walk {w.arcs} is not a maximal omnitig")
    if g.node_count <= max_nodes and g.arc_count <= max_arcs:
        missing = brute_force_maximal_omnitigs(g, max_nodes, max_arcs) - got
        if missing:
            result.problems.append(f"missing {sorted(missing)}")
    return result


def run_verification_suite(
    seeds: int | Iterable[int],
    backend: Backend | str = Backend.SCC_CACHE,
    safety_samples: int = 20,
    max_nodes: int = DEFAULT_MAX_NODES,
    max_arcs: int = DEFAULT_MAX_ARCS,
    corpus: Corpus | None = None,
) -> VerificationSummary:
    """Run every check over the given seeds (or range(seeds)) and the corpus graphs"""
    seed_list = list(range(seeds)) if isinstance(seeds, int) else list(seeds)
    summary = VerificationSummary(seeds=len(seed_list))
    start = time.perf_counter()
    rejected = 0
    witnessed = 0
    for seed in seed_list:
        result = run_seed(seed, backend, safety_samples, max_nodes, max_arcs)
        summary.results.append(result)
        summary.closed_paths += result.closed_path
        summary.omnitigs += result.omnitigs
        summary.oracle_queries += result.oracle_queries
        rejected += result.rejected_extensions
        witnessed += result.witnessed_rejections
        if result.passed:
            summary.passed += 1
        else:
            summary.failed_seeds.append(seed)
            logger.warning("seed %d failed verification", seed)
    for sample in (corpus or Corpus()).samples():
        sample_result = check_sample(sample, backend, max_nodes, max_arcs)
        summary.sample_results.append(sample_result)
        summary.corpus_samples += 1
        if not sample_result.passed:
            summary.failed_samples.append(sample.id)
            logger.warning("corpus graph %s failed: %s", sample.id, "; ".join(sample_result.problems))
    if rejected:
        summary.witnessed_rejection_rate = witnessed / rejected
    summary.elapsed_seconds = time.perf_counter() - start
    logger.info("verified %d/%d seeds in %.2fs", summary.passed, summary.seeds, summary.elapsed_seconds)
    return summary
