"""
Observer: Bench and verification metrics for human analysis
These metrics never feed back into the pipeline.
"""
import json
from collections import Counter
from datetime import datetime
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel, Field

from ..enumeration import OmnitigRepresentation
from ..kernel import Kernel
from ..verify.suite import VerificationSummary


class BenchRow(BaseModel):
    """One pipeline run on one generated graph"""
    nodes: int
    arcs: int
    seed: int
    backend: str
    timestamp: datetime = Field(default_factory=datetime.now)

    compressed_nodes: int = 0
    compressed_arcs: int = 0
    handles: int = 0
    output_length: int = Field(0, description="Total arc count of all maximal omnitigs")

    steps: dict[str, int] = Field(default_factory=dict, description="Step counters per kind")
    step_total: int = Field(0, description="Steps up to handle construction, materialization excluded")
    phase_seconds: dict[str, float] = Field(default_factory=dict)
    handle_seconds: float = 0.0
    materialize_seconds: float = 0.0

    @property
    def enumerate_seconds(self) -> float:
        return self.handle_seconds + self.materialize_seconds


class Observer:
    """
    Observer module for bench and verify runs.
    Writes rows to JSONL and CSV inside the run directory.

    Summaries include:
    - Per-doubling growth of step counts relative to m
    - Per-doubling growth of wall time relative to m + output length
    """

    CSV_HEADERS = [
        "timestamp", "nodes", "arcs", "seed", "backend",
        "compressed_nodes", "compressed_arcs", "handles", "output_length",
        "step_total", "handle_seconds", "materialize_seconds",
    ]

    def __init__(self, storage_path: Path):
        self.storage_path = storage_path
        self.storage_path.mkdir(parents=True, exist_ok=True)
        self.metrics_file = self.storage_path / "bench.jsonl"
        self.metrics_csv = self.storage_path / "bench.csv"
        self.summary_file = self.storage_path / "summary.json"
        self.rows: list[BenchRow] = []
        self._init_csv()

    def compute_bench_row(
        self,
        kernel: Kernel,
        rep: OmnitigRepresentation,
        seed: int,
        handle_seconds: float,
        materialize_seconds: float,
    ) -> BenchRow:
        """Metrics of a finished kernel run"""
        compressed = kernel.transformed.graph if kernel.transformed else kernel.graph
        counter: Counter[str] = kernel.counter
        return BenchRow(
            nodes=kernel.graph.node_count,
            arcs=kernel.graph.arc_count,
            seed=seed,
            backend=kernel.backend.value,
            compressed_nodes=compressed.node_count,
            compressed_arcs=compressed.arc_count,
            handles=len(rep.handles),
            output_length=sum(h.length for h in rep.handles),
            steps=dict(counter),
            step_total=sum(counter.values()),
            phase_seconds=dict(kernel.timings),
            handle_seconds=handle_seconds,
            materialize_seconds=materialize_seconds,
        )

    def _init_csv(self) -> None:
        if not self.metrics_csv.exists():
            with open(self.metrics_csv, "w", encoding="utf-8") as f:
                f.write(",".join(self.CSV_HEADERS) + "\n")

    def log_bench_row(self, row: BenchRow) -> None:
        """Append a bench row (JSONL and CSV)"""
        self.rows.append(row)
        with open(self.metrics_file, "a", encoding="utf-8") as f:
            f.write(row.model_dump_json() + "\n")
        values = [
            row.timestamp.isoformat(),
            str(row.nodes),
            str(row.arcs),
            str(row.seed),
            row.backend,
            str(row.compressed_nodes),
            str(row.compressed_arcs),
            str(row.handles),
            str(row.output_length),
            str(row.step_total),
            f"{row.handle_seconds:.6f}",
            f"{row.materialize_seconds:.6f}",
        ]
        with open(self.metrics_csv, "a", encoding="utf-8") as f:
            f.write(",".join(values) + "\n")

    def log_verification(self, summary: VerificationSummary) -> list[Path]:
        """
        Write verification.json and one edge list per failing seed.
        Returns the counterexample paths.
        """
        with open(self.storage_path / "verification.json", "w", encoding="utf-8") as f:
            f.write(summary.model_dump_json(indent=2))
        paths = []
        for result in summary.results:
            if result.counterexample is None:
                continue
            path = self.storage_path / f"counterexample_seed{result.seed}.el"
            path.write_text(result.counterexample, encoding="utf-8")
            paths.append(path)
        return paths

    def compute_summary(self) -> dict[str, Any]:
        """
        Growth ratios between consecutive sizes, normalized by growth of the
        input: 1.0 means exactly linear.
        """
        if not self.rows:
            return {"runs": 0}
        rows = sorted(self.rows, key=lambda r: r.arcs)
        arcs = np.array([r.arcs for r in rows], dtype=np.float64)
        steps = np.array([r.step_total for r in rows], dtype=np.float64)
        work = arcs + np.array([r.output_length for r in rows], dtype=np.float64)
        wall = np.array([r.enumerate_seconds for r in rows], dtype=np.float64)

        summary: dict[str, Any] = {
            "runs": len(rows),
            "arcs": arcs.astype(int).tolist(),
            "steps_per_arc": (steps / arcs).tolist(),
        }
        if len(rows) > 1:
            step_ratio = (steps[1:] / steps[:-1]) / (arcs[1:] / arcs[:-1])
            with np.errstate(divide="ignore", invalid="ignore"):
                wall_ratio = (wall[1:] / wall[:-1]) / (work[1:] / work[:-1])
            summary["step_growth"] = step_ratio.tolist()
            summary["wall_growth"] = np.nan_to_num(wall_ratio, nan=0.0, posinf=0.0).tolist()
            summary["max_step_growth"] = float(step_ratio.max())
            summary["max_wall_growth"] = float(np.nan_to_num(wall_ratio, nan=0.0, posinf=0.0).max())

        with open(self.summary_file, "w", encoding="utf-8") as f:
            json.dump(summary, f, indent=2, default=str)
        return summary
