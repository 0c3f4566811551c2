"""
OMNITIGS: Maximal omnitig enumeration

Main entry point for the command line.
"""
import argparse
import json
import logging
import sys
import time
from collections.abc import Sequence
from datetime import datetime
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

sys.path.insert(0, str(Path(__file__).parent.parent))

from config import (
    BENCH_BACKEND,
    BENCH_SEED,
    BENCH_SIZES,
    BRUTE_FORCE_MAX_ARCS,
    BRUTE_FORCE_MAX_NODES,
    CORPUS_DIR,
    LOG_LEVEL,
    OMNITIG_BACKEND,
    RUNS_DIR,
    SAFETY_SAMPLES,
    VERIFY_SEEDS,
)
from .assembly import DeBruijnGraph, build_de_bruijn, parse_edge_list, parse_gfa_subset, read_fasta, spell
from .corpus import Corpus
from .enumeration import (
    OmnitigRepresentation,
    all_maximal_omnitig_handles,
    all_maximal_omnitig_handles_per_scc,
    length_stats,
    materialize,
)
from .errors import GraphContractError, InputFormatError, VerificationError
from .graph import Graph, Walk, maximal_unitigs
from .kernel import create_kernel
from .oracle import Backend
from .observer import Observer
from .verify.sampling import random_scc_graph
from .verify.suite import run_verification_suite

console = Console(stderr=True)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONTRACT = 2
EXIT_VERIFICATION = 3


def create_run_directory() -> Path:
    """Create a timestamped directory for this run"""
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    run_dir = RUNS_DIR / f"run_{timestamp}"
    run_dir.mkdir(parents=True, exist_ok=True)
    return run_dir


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else LOG_LEVEL,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def load_input(args: argparse.Namespace) -> tuple[Graph, DeBruijnGraph | None]:
    """Read the graph named by --input in --format, or the corpus graph named by --sample"""
    if args.sample is not None:
        sample = Corpus(Path(args.corpus)).get_by_id(args.sample)
        if sample is None:
            raise InputFormatError(f"no corpus graph named {args.sample!r}")
        if sample.edge_list is None and sample.k is not None:
            dbg = build_de_bruijn(sample.reads, sample.k)
            return dbg.graph, dbg
        return sample.graph(), None
    if args.input is None:
        raise InputFormatError("--input or --sample is required")
    path = Path(args.input)
    try:
        if args.format == "fasta":
            if args.k is None:
                raise InputFormatError("--k is required for fasta input")
            dbg = build_de_bruijn(read_fasta(path), args.k, skip_short=args.skip_short_reads)
            return dbg.graph, dbg
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror or exc}") from exc
    if args.format == "gfa":
        graph, _ = parse_gfa_subset(text)
        return graph, None
    return parse_edge_list(text), None


def write_lines(lines: Sequence[str], output: str | None) -> None:
    text = "".join(line + "\n" for line in lines)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _arcs(arcs: Sequence[int], arc_map: Sequence[int] | None = None) -> str:
    return ",".join(str(arc_map[e] if arc_map else e) for e in arcs)


def _representations(
    graph: Graph, args: argparse.Namespace
) -> list[tuple[int | None, Sequence[int] | None, OmnitigRepresentation]]:
    """(component, arc_map, representation); component is None outside --per-scc"""
    apply_constant_degree = not args.skip_constant_degree
    if args.per_scc:
        return [
            (component, arc_map, rep)
            for component, _, arc_map, rep in all_maximal_omnitig_handles_per_scc(
                graph, args.backend, apply_constant_degree
            )
        ]
    return [(None, None, all_maximal_omnitig_handles(graph, args.backend, apply_constant_degree))]


def command_enumerate(args: argparse.Namespace) -> list[str]:
    graph, dbg = load_input(args)
    lines: list[str] = []
    for component, arc_map, rep in _representations(graph, args):
        prefix = "" if component is None else f"{component}\t"
        if rep.closed_path:
            lines.append("# closed_path" if component is None else f"# closed_path component={component}")
        if args.handles_only:
            for index, arcs in enumerate(rep.macrotigs):
                lines.append(f"{prefix}macrotig\t{index}\t{_arcs(arcs, arc_map)}")
            for index, handle in enumerate(rep.handles):
                lines.append(f"{prefix}handle\t{index}\t{handle.length}\t{handle.describe()}")
            continue
        for index, handle in enumerate(rep.handles):
            walk = materialize(rep, handle)
            row = f"{prefix}{index}\t{len(walk)}\t{_arcs(walk.arcs, arc_map)}"
            if dbg is not None:
                spelled_walk = Walk(tuple(arc_map[e] for e in walk.arcs), walk.closed) if arc_map else walk
                row += f"\t{spell(dbg, spelled_walk)}"
            if args.provenance:
                row += f"\t{handle.describe()}"
            lines.append(row)
    return lines


def command_stats(args: argparse.Namespace) -> list[str]:
    graph, _ = load_input(args)
    reps = _representations(graph, args)
    lengths = [h.length for _, _, rep in reps for h in rep.handles]
    lines = []
    if args.per_scc:
        lines.append(f"components={len(reps)}")
    lines.extend(length_stats(lengths).lines())
    if args.unitigs:
        lines.extend(length_stats(len(u) for u in maximal_unitigs(graph)).lines("unitig_"))
    return lines


def command_macrotigs(args: argparse.Namespace) -> list[str]:
    graph, _ = load_input(args)
    lines = []
    for component, arc_map, rep in _representations(graph, args):
        prefix = "" if component is None else f"{component}\t"
        if rep.closed_path:
            lines.append("# closed_path" if component is None else f"# closed_path component={component}")
        for index, arcs in enumerate(rep.macrotigs):
            lines.append(f"{prefix}{index}\t{len(arcs)}\t{_arcs(arcs, arc_map)}")
    return lines


def command_verify(args: argparse.Namespace) -> list[str]:
    run_dir = create_run_directory()
    console.print(f"[green]Run directory:[/green] {run_dir}")
    console.print(f"[yellow]Verifying {args.seeds} seeds with the {args.backend} backend...[/yellow]")
    summary = run_verification_suite(
        args.seeds,
        backend=args.backend,
        safety_samples=args.safety_samples,
        max_nodes=BRUTE_FORCE_MAX_NODES,
        max_arcs=BRUTE_FORCE_MAX_ARCS,
        corpus=Corpus(Path(args.corpus)),
    )
    counterexamples = Observer(run_dir).log_verification(summary)

    table = Table(show_header=False, box=None)
    table.add_column("Field", style="cyan")
    table.add_column("Value")
    table.add_row("Seeds", str(summary.seeds))
    table.add_row("Passed", str(summary.passed))
    table.add_row("Corpus graphs", f"{summary.corpus_samples - len(summary.failed_samples)}/{summary.corpus_samples}")
    table.add_row("Closed paths", str(summary.closed_paths))
    table.add_row("Omnitigs", str(summary.omnitigs))
    table.add_row("Oracle queries compared", str(summary.oracle_queries))
    table.add_row("Refuted extensions", f"{summary.witnessed_rejection_rate:.1%}")
    table.add_row("Elapsed", f"{summary.elapsed_seconds:.2f}s")
    style = "green" if summary.ok else "red"
    console.print(Panel(table, title=f"[bold {style}]Verification[/bold {style}]"))
    for path in counterexamples:
        console.print(f"[red]Counterexample:[/red] {path}")

    lines = [
        f"seeds={summary.seeds}",
        f"passed={summary.passed}",
        f"failed={len(summary.failed_seeds)}",
        f"corpus_samples={summary.corpus_samples}",
        f"corpus_failed={len(summary.failed_samples)}",
        f"closed_paths={summary.closed_paths}",
        f"witnessed_rejection_rate={summary.witnessed_rejection_rate:g}",
    ]
    if not summary.ok:
        write_lines(lines, args.output)
        raise VerificationError(
            f"seeds failed: {summary.failed_seeds[:20]}, corpus graphs failed: {summary.failed_samples}"
        )
    return lines


def command_bench(args: argparse.Namespace) -> list[str]:
    run_dir = create_run_directory()
    observer = Observer(run_dir)
    console.print(f"[green]Run directory:[/green] {run_dir}")
    lines = []
    for n in args.sizes:
        graph = random_scc_graph(n, 2 * n, args.seed)
        kernel = create_kernel(graph, backend=args.backend, apply_constant_degree=not args.skip_constant_degree)
        start = time.perf_counter()
        rep = kernel.run()
        handle_seconds = time.perf_counter() - start
        start = time.perf_counter()
        for handle in rep.handles:
            materialize(rep, handle)
        materialize_seconds = time.perf_counter() - start

        row = observer.compute_bench_row(kernel, rep, args.seed, handle_seconds, materialize_seconds)
        observer.log_bench_row(row)
        console.print(f"[dim]n={n} m={2 * n}: {row.handles} omnitigs in {handle_seconds:.2f}s[/dim]")
        lines.append(
            f"{row.nodes}\t{row.arcs}\t{row.step_total}\t{row.handles}\t{row.output_length}"
            f"\t{row.handle_seconds:.6f}\t{row.materialize_seconds:.6f}"
        )
    summary = observer.compute_summary()
    console.print(Panel(json.dumps(summary, indent=2), title="[bold green]Bench Summary[/bold green]"))
    return lines


COMMANDS = {
    "enumerate": command_enumerate,
    "stats": command_stats,
    "macrotigs": command_macrotigs,
    "verify": command_verify,
    "bench": command_bench,
}


def _sizes(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="Input graph file")
    common.add_argument("--sample", help="Use the named corpus graph instead of --input")
    common.add_argument("--corpus", default=str(CORPUS_DIR), help="Directory holding corpus.jsonl")
    common.add_argument("--format", choices=["edgelist", "gfa", "fasta"], default="edgelist")
    common.add_argument("--k", type=int, help="k-mer length (fasta only)")
    common.add_argument("--skip-short-reads", action="store_true", help="Skip reads shorter than k")
    common.add_argument(
        "--backend",
        choices=[b.value for b in Backend],
        default=OMNITIG_BACKEND,
        help=f"Failure oracle backend (default: {OMNITIG_BACKEND})",
    )
    common.add_argument("--output", help="Write results here instead of stdout")
    common.add_argument("--per-scc", action="store_true", help="Run on every non-trivial SCC")
    common.add_argument("--skip-constant-degree", action="store_true", help="Do not fan out high-degree nodes")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    parser = argparse.ArgumentParser(description="OMNITIGS: Maximal omnitig enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    enumerate_parser = sub.add_parser("enumerate", parents=[common], help="List all maximal omnitigs")
    enumerate_parser.add_argument("--handles-only", action="store_true", help="Print the compact representation")
    enumerate_parser.add_argument("--provenance", action="store_true", help="Add the handle of each omnitig")

    stats_parser = sub.add_parser("stats", parents=[common], help="Length statistics without materializing")
    stats_parser.add_argument("--unitigs", action="store_true", help="Also report maximal unitig statistics")

    sub.add_parser("macrotigs", parents=[common], help="List the maximal macrotigs")

    verify_parser = sub.add_parser("verify", parents=[common], help="Check the pipeline against brute force")
    verify_parser.add_argument("--seeds", type=int, default=VERIFY_SEEDS)
    verify_parser.add_argument("--safety-samples", type=int, default=SAFETY_SAMPLES)

    bench_parser = sub.add_parser("bench", parents=[common], help="Scaling run on generated graphs")
    bench_parser.add_argument("--sizes", type=_sizes, default=BENCH_SIZES, help="Comma-separated node counts")
    bench_parser.add_argument("--seed", type=int, default=BENCH_SEED)
    bench_parser.set_defaults(backend=BENCH_BACKEND)
    return parser


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_CONTRACT
    setup_logging(args.verbose)

    try:
        lines = COMMANDS[args.command](args)
    except VerificationError as exc:
        console.print(f"[red]Verification failed: {exc}[/red]")
        return EXIT_VERIFICATION
    except (InputFormatError, GraphContractError) as exc:
        console.print(f"[red]Error: {exc}[/red]")
        return EXIT_CONTRACT
    write_lines(lines, args.output)
    return EXIT_OK


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
