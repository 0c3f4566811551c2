"""
Errors: Exception hierarchy for the omnitig toolkit
"""


class OmnitigError(Exception):
    """Base class for every error raised by the toolkit"""


class GraphContractError(OmnitigError):
    """A graph or parameter violates an operation's precondition"""


class InputFormatError(OmnitigError):
    """Malformed input text. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotStronglyConnectedError(GraphContractError):
    """The graph must be strongly connected"""


class ClosedPathError(GraphContractError):
    """The graph is a single directed cycle; every walk is an omnitig"""


class NotCompressedError(GraphContractError):
    """The graph still has biunivocal nodes or arcs"""


class ExpansionError(OmnitigError):
    """A transformed walk cannot be mapped back to the original graph"""


class StructureInvariantError(OmnitigError):
    """An algorithmic invariant failed while building macrotigs or scanning them"""


class SizeCapError(GraphContractError):
    """Input exceeds the caps of an exhaustive search"""


class VerificationError(OmnitigError):
    """A verification oracle disagreed with the pipeline"""
