"""
Corpus: Named graphs with known maximal-omnitig counts
"""
import json
from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError

from ..assembly import build_de_bruijn, parse_edge_list
from ..errors import GraphContractError, InputFormatError
from ..graph import Graph


class GraphKind(str, Enum):
    BOUQUET = "bouquet"
    CYCLE = "cycle"
    CHORD = "chord"
    CHAIN = "chain"
    DE_BRUIJN = "de_bruijn"


class GraphSample(BaseModel):
    """A named graph, given as an edge list or as reads with k"""
    id: str
    kind: GraphKind
    title: str
    edge_list: str | None = None
    reads: list[str] = Field(default_factory=list)
    k: int | None = None
    expected_count: int | None = Field(None, description="Number of maximal omnitigs, when known")
    closed_path: bool = False
    metadata: dict[str, Any] = Field(default_factory=dict)

    def graph(self) -> Graph:
        if self.edge_list is not None:
            return parse_edge_list(self.edge_list)
        if self.k is None:
            raise GraphContractError(f"sample {self.id} has neither an edge list nor k")
        return build_de_bruijn(self.reads, self.k).graph


class Corpus:
    """
    Built-in graphs plus any listed in `storage_path/corpus.jsonl`, one
    GraphSample JSON object per line. A stored sample replaces a built-in one
    with the same id.
    """

    def __init__(self, storage_path: Path | None = None):
        self.storage_path = storage_path
        self._samples: dict[str, GraphSample] = {}
        self._by_kind: dict[GraphKind, list[str]] = {kind: [] for kind in GraphKind}
        for sample in builtin_samples():
            self._register(sample)
        self._load_samples()

    def _register(self, sample: GraphSample) -> None:
        previous = self._samples.get(sample.id)
        if previous is not None and previous.kind is not sample.kind:
            self._by_kind[previous.kind].remove(sample.id)
        if previous is None or previous.kind is not sample.kind:
            self._by_kind[sample.kind].append(sample.id)
        self._samples[sample.id] = sample

    def _load_samples(self) -> None:
        if self.storage_path is None:
            return
        corpus_file = self.storage_path / "corpus.jsonl"
        if corpus_file.exists():
            with open(corpus_file, "r", encoding="utf-8") as f:
                for number, line in enumerate(f, start=1):
                    if not line.strip():
                        continue
                    try:
                        self._register(GraphSample(**json.loads(line)))
                    except (json.JSONDecodeError, ValidationError) as exc:
                        raise InputFormatError(f"{corpus_file.name}: bad sample: {exc}", number) from exc

    def get_by_id(self, sample_id: str) -> GraphSample | None:
        return self._samples.get(sample_id)

    def samples(self, kind: GraphKind | None = None) -> list[GraphSample]:
        ids = self._by_kind[kind] if kind else list(self._samples)
        return [self._samples[i] for i in ids]

    def count(self, kind: GraphKind | None = None) -> int:
        return len(self._by_kind[kind]) if kind else len(self._samples)


def builtin_samples() -> list[GraphSample]:
    return [
        GraphSample(
            id="bouquet2",
            kind=GraphKind.BOUQUET,
            title="One node, two self-loops",
            edge_list="1 2\n0 0\n0 0\n",
            expected_count=2,
            metadata={"omnitigs": [[0, 1], [1, 0]]},
        ),
        GraphSample(
            id="bouquet3",
            kind=GraphKind.BOUQUET,
            title="One node, three self-loops",
            edge_list="1 3\n0 0\n0 0\n0 0\n",
            expected_count=3,
            metadata={"omnitigs": [[0], [1], [2]]},
        ),
        GraphSample(
            id="bouquet4",
            kind=GraphKind.BOUQUET,
            title="One node, four self-loops",
            edge_list="1 4\n0 0\n0 0\n0 0\n0 0\n",
            expected_count=4,
            metadata={"omnitigs": [[0], [1], [2], [3]]},
        ),
        GraphSample(
            id="cycle2",
            kind=GraphKind.CYCLE,
            title="Two-node cycle",
            edge_list="2 2\n0 1\n1 0\n",
            expected_count=1,
            closed_path=True,
        ),
        GraphSample(
            id="cycle5",
            kind=GraphKind.CYCLE,
            title="Five-node cycle",
            edge_list="5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n",
            expected_count=1,
            closed_path=True,
        ),
        GraphSample(
            id="triangle_chord",
            kind=GraphKind.CHORD,
            title="Three-node cycle with a chord 0 -> 2",
            edge_list="3 4\n0 1\n1 2\n2 0\n0 2\n",
            expected_count=2,
            metadata={"omnitigs": [[2, 0, 1, 2, 3, 2], [2, 3, 2, 0, 1, 2]]},
        ),
        GraphSample(
            id="split_join",
            kind=GraphKind.CHORD,
            title="Node 0 splits into two routes that join at node 1, which returns to 0",
            edge_list="3 4\n0 1\n0 2\n2 1\n1 0\n",
            expected_count=2,
            metadata={"omnitigs": [[3, 0, 3, 1, 2, 3], [3, 1, 2, 3, 0, 3]]},
        ),
        GraphSample(
            id="figure_eight",
            kind=GraphKind.CHAIN,
            title="Two cycles of chains through node 0",
            edge_list="4 5\n0 1\n1 0\n0 2\n2 3\n3 0\n",
            expected_count=2,
            metadata={"omnitigs": [[0, 1, 2, 3, 4], [2, 3, 4, 0, 1]]},
        ),
        GraphSample(
            id="acgt_circle",
            kind=GraphKind.DE_BRUIJN,
            title="Order-3 de Bruijn graph of the circular string ACGT",
            reads=["ACG", "CGT", "GTA", "TAC"],
            k=3,
            expected_count=1,
            closed_path=True,
        ),
    ]
