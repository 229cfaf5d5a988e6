"""Error hierarchy shared by every module; the CLI maps each family to an exit status."""

from typing import Optional

from .constants import EXIT_FAILURE, EXIT_LIMIT_REFUSED, EXIT_PARSE_ERROR


class LRFrontError(ValueError):
    """Base class for all toolkit errors."""

    exit_code = EXIT_FAILURE


class DimensionError(LRFrontError):
    """Operands act on different numbers of qubits."""


class DenseLimitError(LRFrontError):
    """Dense representation refused above the configured qubit limit."""

    exit_code = EXIT_LIMIT_REFUSED

    def __init__(self, qubit_count: int, limit: int):
        self.qubit_count = qubit_count
        self.limit = limit
        super().__init__(
            f"{qubit_count} qubits exceeds the dense limit of {limit} (LRFRONT_DENSE_LIMIT)"
        )


class CapExceededError(LRFrontError):
    """A configured size cap would be exceeded."""

    exit_code = EXIT_LIMIT_REFUSED

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: {size} exceeds cap {cap}")


class NetworkError(LRFrontError):
    """Invalid network description."""

    exit_code = EXIT_PARSE_ERROR


class NetworkParseError(NetworkError):
    """Malformed network text, with line/field diagnostics."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class SelfLoopError(NetworkError):
    """Edge joins a qubit to itself."""


class DuplicateEdgeError(NetworkError):
    """Edge listed more than once."""


class SymmetryError(NetworkError):
    """Mirrored edges disagree on the coupling."""


class SiteIndexError(LRFrontError):
    """Qubit index outside 1..qubit_count."""

    exit_code = EXIT_PARSE_ERROR


class UnreachablePairError(LRFrontError):
    """No path joins the pair, so no order of the expansion is nonzero."""

    def __init__(self, source: int, target: int):
        self.source = source
        self.target = target
        super().__init__(f"qubits {source} and {target} are not connected: no leading order")


class AngleDomainError(LRFrontError):
    """Direction outside the fundamental wedge."""

    exit_code = EXIT_PARSE_ERROR


class DegenerateCrossingError(LRFrontError):
    """Threshold times along a ray are not strictly increasing."""


class TimeGridError(LRFrontError):
    """Time grid empty, negative or not strictly increasing."""

    exit_code = EXIT_PARSE_ERROR


class ConfigError(LRFrontError):
    """Command options that cannot be combined."""

    exit_code = EXIT_PARSE_ERROR
