"""Exception types shared across the toolkit.

Every operation with a documented failure mode raises one of these, so
callers (and the CLI) can map failures to exit codes without string
matching.
"""


class GraphFormatError(ValueError):
    """Malformed instance text (bad header, bad line, wrong edge count)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VertexRangeError(ValueError):
    """A vertex id lies outside the declared id range."""


class InvalidGraphError(ValueError):
    """Input violates the simple-graph invariants (e.g. a self-loop)."""


class ParameterError(ValueError):
    """Infeasible or out-of-range parameter for a generator or solver."""


class SizeCapError(RuntimeError):
    """Instance exceeds the size cap of a brute-force oracle."""


class DomainError(ValueError):
    """Input outside an operation's domain (e.g. disconnected graph)."""


class ContractError(RuntimeError):
    """A caller- or plugin-side contract was violated at runtime."""
