"""
Edge list: Plain-text graph format

    n m
    tail head [label]
    ...

Whitespace separated; lines starting with '#' and blank lines are skipped.
"""
from ..errors import GraphContractError, InputFormatError
from ..graph import Graph, build_graph


def _int(token: str, what: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise InputFormatError(f"{what} must be an integer, got {token!r}", line) from None
    if value < 0:
        raise InputFormatError(f"{what} must be non-negative, got {value}", line)
    return value


def parse_edge_list(text: str) -> Graph:
    header: tuple[int, int] | None = None
    arcs: list[tuple] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise InputFormatError("header must be 'n m'", number)
            header = (_int(tokens[0], "node count", number), _int(tokens[1], "arc count", number))
            continue
        if len(tokens) not in (2, 3):
            raise InputFormatError("arc line must be 'tail head [label]'", number)
        tail = _int(tokens[0], "tail", number)
        head = _int(tokens[1], "head", number)
        if tail >= header[0] or head >= header[0]:
            raise InputFormatError(f"arc ({tail}, {head}) has an endpoint outside 0..{header[0] - 1}", number)
        arcs.append((tail, head, tokens[2]) if len(tokens) == 3 else (tail, head))
    if header is None:
        raise InputFormatError("missing 'n m' header")
    if len(arcs) != header[1]:
        raise InputFormatError(f"header announces {header[1]} arcs, found {len(arcs)}")
    try:
        return build_graph(header[0], arcs)
    except GraphContractError as exc:
        raise InputFormatError(str(exc)) from exc


def serialize_edge_list(g: Graph, comment: str | None = None) -> str:
    """Inverse of parse_edge_list; labels containing whitespace are not representable"""
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.node_count} {g.arc_count}")
    for e, t, h in g.arcs():
        label = g.labels[e]
        lines.append(f"{t} {h}" if label is None else f"{t} {h} {label}")
    return "\n".join(lines) + "\n"
