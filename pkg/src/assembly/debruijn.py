"""
De Bruijn: Order-k de Bruijn graphs of DNA reads and the strings their walks spell
"""
import logging
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from Bio import SeqIO

from ..errors import GraphContractError, InputFormatError
from ..graph import Graph, Walk, build_graph, is_walk

logger = logging.getLogger(__name__)

ALPHABET = frozenset("ACGT")


@dataclass(frozen=True)
class DeBruijnGraph:
    """
    Nodes are the distinct (k-1)-mers, arcs the distinct k-mers of the reads,
    each from its prefix to its suffix. Both are numbered in sorted order.
    """

    k: int
    graph: Graph
    node_labels: tuple[str, ...]
    arc_labels: tuple[str, ...]


def read_fasta(source: str | Path | TextIO) -> list[str]:
    """Sequences of a FASTA file, one string per record"""
    handle = str(source) if isinstance(source, Path) else source
    return [str(record.seq) for record in SeqIO.parse(handle, "fasta")]


def build_de_bruijn(reads: Iterable[str], k: int, skip_short: bool = False) -> DeBruijnGraph:
    if k < 2:
        raise GraphContractError(f"k must be at least 2, got {k}")
    kmers: set[str] = set()
    skipped = 0
    for index, raw in enumerate(reads):
        read = raw.upper()
        invalid = set(read) - ALPHABET
        if invalid:
            raise InputFormatError(f"read {index} contains characters outside ACGT: {''.join(sorted(invalid))}")
        if len(read) < k:
            if skip_short:
                skipped += 1
                continue
            raise InputFormatError(f"read {index} has length {len(read)} < k={k}")
        kmers.update(read[i:i + k] for i in range(len(read) - k + 1))
    if skipped:
        logger.warning("skipped %d reads shorter than k=%d", skipped, k)

    arc_labels = tuple(sorted(kmers))
    node_labels = tuple(sorted({kmer[:-1] for kmer in kmers} | {kmer[1:] for kmer in kmers}))
    node_index = {label: i for i, label in enumerate(node_labels)}
    graph = build_graph(
        len(node_labels),
        [(node_index[kmer[:-1]], node_index[kmer[1:]], kmer) for kmer in arc_labels],
    )
    logger.debug("de Bruijn graph k=%d: %d nodes, %d arcs", k, len(node_labels), len(arc_labels))
    return DeBruijnGraph(k, graph, node_labels, arc_labels)


def spell(dbg: DeBruijnGraph, w: Walk) -> str:
    """
    Merge consecutive k-mers on their (k-1)-overlaps. An open walk of l arcs
    spells k + l - 1 characters; a closed one spells a circular string of l.
    """
    if not is_walk(dbg.graph, w):
        raise GraphContractError("not a walk of the de Bruijn graph")
    if not w.arcs:
        return dbg.node_labels[w.anchor] if w.anchor is not None else ""
    if w.closed:
        return "".join(dbg.arc_labels[e][0] for e in w.arcs)
    return dbg.arc_labels[w.arcs[0]] + "".join(dbg.arc_labels[e][-1] for e in w.arcs[1:])
