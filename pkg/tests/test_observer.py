import json

import pytest

from src.enumeration import all_maximal_omnitig_handles
from src.kernel import create_kernel
from src.observer import BenchRow, Observer
from src.verify import random_scc_graph
from src.verify.suite import SeedResult, VerificationSummary


def _row(arcs: int, steps: int, seconds: float) -> BenchRow:
    return BenchRow(
        nodes=arcs // 2,
        arcs=arcs,
        seed=0,
        backend="fast",
        step_total=steps,
        output_length=arcs,
        handle_seconds=seconds,
    )


def test_linear_rows_have_unit_growth(tmp_path) -> None:
    observer = Observer(tmp_path)
    observer.log_bench_row(_row(200, 4000, 0.2))
    observer.log_bench_row(_row(100, 2000, 0.1))
    summary = observer.compute_summary()
    assert summary["runs"] == 2
    assert summary["arcs"] == [100, 200]
    assert summary["step_growth"] == [1.0]
    assert abs(summary["wall_growth"][0] - 1.0) < 1e-9
    assert summary["steps_per_arc"] == [20.0, 20.0]
    assert json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))["runs"] == 2


def test_rows_are_written_as_jsonl_and_csv(tmp_path) -> None:
    observer = Observer(tmp_path)
    observer.log_bench_row(_row(10, 50, 0.01))
    csv_lines = (tmp_path / "bench.csv").read_text(encoding="utf-8").splitlines()
    assert csv_lines[0].split(",") == Observer.CSV_HEADERS
    assert len(csv_lines) == 2
    stored = json.loads((tmp_path / "bench.jsonl").read_text(encoding="utf-8"))
    assert stored["step_total"] == 50


def test_empty_summary(tmp_path) -> None:
    assert Observer(tmp_path).compute_summary() == {"runs": 0}


def test_bench_row_from_kernel(tmp_path) -> None:
    kernel = create_kernel(random_scc_graph(12, 30, seed=2), backend="fast")
    rep = kernel.run()
    row = Observer(tmp_path).compute_bench_row(kernel, rep, seed=2, handle_seconds=0.5, materialize_seconds=0.25)
    assert (row.nodes, row.arcs, row.backend) == (12, 30, "fast")
    assert row.handles == len(rep.handles)
    assert row.step_total == sum(kernel.counter.values()) > 0
    assert row.enumerate_seconds == 0.75
    assert set(row.phase_seconds) == set(kernel.PHASES)
    assert row.output_length == sum(h.length for h in all_maximal_omnitig_handles(kernel.graph).handles)


def test_counterexamples_are_written(tmp_path) -> None:
    failing = SeedResult(seed=7, nodes=1, arcs=2, extra=[(0, 1, 0)], counterexample="1 2\n0 0\n0 0\n")
    summary = VerificationSummary(seeds=2, passed=1, failed_seeds=[7], results=[SeedResult(seed=1, nodes=1, arcs=1), failing])
    paths = Observer(tmp_path).log_verification(summary)
    assert [p.name for p in paths] == ["counterexample_seed7.el"]
    assert paths[0].read_text(encoding="utf-8").startswith("1 2")
    assert json.loads((tmp_path / "verification.json").read_text(encoding="utf-8"))["failed_seeds"] == [7]


def test_fast_backend_steps_grow_linearly_per_doubling(tmp_path) -> None:
    observer = Observer(tmp_path)
    for n in [500, 1000, 2000]:
        kernel = create_kernel(random_scc_graph(n, 2 * n, seed=0), backend="fast")
        rep = kernel.run()
        observer.log_bench_row(observer.compute_bench_row(kernel, rep, 0, 0.0, 0.0))
    summary = observer.compute_summary()
    assert summary["max_step_growth"] < 1.5


@pytest.mark.slow
def test_fast_backend_scales_to_large_graphs(tmp_path) -> None:
    observer = Observer(tmp_path)
    for n in [10_000, 20_000, 40_000]:
        kernel = create_kernel(random_scc_graph(n, 2 * n, seed=0), backend="fast")
        rep = kernel.run()
        observer.log_bench_row(observer.compute_bench_row(kernel, rep, 0, 0.0, 0.0))
    assert observer.compute_summary()["max_step_growth"] < 1.3
