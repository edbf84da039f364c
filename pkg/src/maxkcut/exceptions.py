"""Exception types shared across the package."""


class MaxKCutError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(MaxKCutError, ValueError):
    """A parameter lies outside the documented domain."""


class InvalidAssignmentError(MaxKCutError, ValueError):
    """A color assignment does not fit the graph or the number of colors."""


class GraphParseError(MaxKCutError, ValueError):
    """A graph file is malformed or violates a graph invariant."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeLimitError(MaxKCutError):
    """A computation would exceed a configured size cap."""


class IncompatibleConfigError(MaxKCutError, ValueError):
    """Encoding and mixer cannot be combined."""


class UnsupportedError(MaxKCutError, ValueError):
    """No construction exists for the requested parameters."""


class MissingTableEntryError(MaxKCutError, KeyError):
    """A gate class has no entry in a CX decomposition table."""

    def __init__(self, gate_class: str):
        self.gate_class = gate_class
        super().__init__(f"no CX cost for gate class {gate_class!r}")

    def __str__(self) -> str:
        return self.args[0]
