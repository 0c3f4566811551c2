"""
Handles: Compact references to maximal omnitigs and the records built from them
"""
from dataclasses import dataclass, field
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from ..graph import Graph, UnivocalIndex
from ..tigs import Macrotig
from ..transform import TransformedGraph


class HandleKind(str, Enum):
    INTERVAL = "interval"
    LEFTOVER = "leftover"
    CYCLE = "cycle"


class OmnitigHandle(BaseModel):
    """
    Reference to one maximal omnitig of the original graph.

    - interval: U(X[f_index..g_index]) for expanded macrotig X = macrotigs[macrotig_id]
    - leftover: U(arcs), where arcs expand a bivalent arc found in no macrotig
    - cycle: the whole graph is a closed path and `arcs` is that cycle
    """

    model_config = ConfigDict(frozen=True)

    kind: HandleKind
    length: int = Field(..., description="Arc count of the materialized omnitig")
    macrotig_id: int | None = None
    f_index: int | None = None
    g_index: int | None = None
    arc_id: int | None = Field(None, description="Compressed-graph arc of a leftover handle")
    arcs: tuple[int, ...] = Field(default=(), description="Original-graph core of leftover and cycle handles")

    def describe(self) -> str:
        """Short provenance tag used in TSV output"""
        if self.kind is HandleKind.INTERVAL:
            return f"interval:M{self.macrotig_id}:{self.f_index}-{self.g_index}"
        if self.kind is HandleKind.LEFTOVER:
            return f"leftover:{self.arc_id}"
        return "cycle"


class LengthStats(BaseModel):
    """Length statistics over a set of walks"""
    count: int = 0
    min: int = 0
    max: int = 0
    mean: float = 0.0
    total: int = 0

    def lines(self, prefix: str = "") -> list[str]:
        mean = f"{self.mean:g}"
        return [
            f"{prefix}count={self.count}",
            f"{prefix}min={self.min}",
            f"{prefix}max={self.max}",
            f"{prefix}mean={mean}",
            f"{prefix}total={self.total}",
        ]


class SafetyViolation(BaseModel):
    omnitig: tuple[int, ...]
    sample_index: int
    sample: tuple[int, ...] = Field(..., description="The covering walk missing the omnitig")


class SafetyReport(BaseModel):
    samples: int
    omnitigs: int
    violations: list[SafetyViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class OmnitigRepresentation:
    """
    The O(m) representation of all maximal omnitigs of `graph`.

    `macrotigs` are expanded to original arc IDs; `compressed_macrotigs` keep the
    transformed-graph view that produced them.
    """

    graph: Graph
    handles: list[OmnitigHandle]
    macrotigs: list[tuple[int, ...]] = field(default_factory=list)
    compressed_macrotigs: list[Macrotig] = field(default_factory=list)
    transformed: TransformedGraph | None = None
    index: UnivocalIndex | None = None
    closed_path: bool = False

    def __len__(self) -> int:
        return len(self.handles)
