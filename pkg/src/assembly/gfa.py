"""
GFA: The '+'-only subset of GFA 1 as a directed graph

One node per S record, one arc per L record, both in file order.
"""
import logging
import re
from dataclasses import dataclass

from ..errors import InputFormatError
from ..graph import Graph, build_graph

logger = logging.getLogger(__name__)

_OVERLAP = re.compile(r"^(\*|\d+M)$")


@dataclass(frozen=True)
class GfaSegment:
    name: str
    sequence: str

    @classmethod
    def from_tokens(cls, tokens: list[str], line: int) -> "GfaSegment":
        if len(tokens) < 3:
            raise InputFormatError("S record needs a name and a sequence", line)
        return cls(tokens[1], tokens[2])


@dataclass(frozen=True)
class GfaLink:
    from_name: str
    to_name: str
    overlap: str

    @classmethod
    def from_tokens(cls, tokens: list[str], line: int) -> "GfaLink":
        if len(tokens) < 6:
            raise InputFormatError("L record needs from, orientation, to, orientation and overlap", line)
        for orientation in (tokens[2], tokens[4]):
            if orientation == "-":
                raise InputFormatError("reverse-complement orientation '-' is not supported", line)
            if orientation != "+":
                raise InputFormatError(f"unrecognized orientation {orientation!r}", line)
        if not _OVERLAP.match(tokens[5]):
            raise InputFormatError(f"overlap must be '*' or an exact match like '12M', got {tokens[5]!r}", line)
        return cls(tokens[1], tokens[3], tokens[5])


def parse_gfa_subset(text: str) -> tuple[Graph, list[str]]:
    """Returns the graph and the segment name of every node"""
    segments: list[GfaSegment] = []
    links: list[tuple[int, GfaLink]] = []
    ignored: set[str] = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        tokens = line.split("\t")
        kind = tokens[0]
        if kind == "S":
            segments.append(GfaSegment.from_tokens(tokens, number))
        elif kind == "L":
            links.append((number, GfaLink.from_tokens(tokens, number)))
        elif kind not in ignored:
            ignored.add(kind)
            logger.warning("ignoring GFA record type %r (first seen on line %d)", kind, number)

    index: dict[str, int] = {}
    for segment in segments:
        if segment.name in index:
            raise InputFormatError(f"duplicate segment name {segment.name!r}")
        index[segment.name] = len(index)

    arcs = []
    for number, link in links:
        for name in (link.from_name, link.to_name):
            if name not in index:
                raise InputFormatError(f"link endpoint {name!r} is not a segment", number)
        arcs.append((index[link.from_name], index[link.to_name], link.overlap))
    return build_graph(len(segments), arcs), [s.name for s in segments]
