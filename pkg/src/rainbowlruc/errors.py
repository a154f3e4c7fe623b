"""Exception hierarchy shared by every module."""


class RainbowError(Exception):
    """Base class for domain errors (mapped to exit code 1 by the CLI)."""

    code = "error"

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoop(RainbowError):
    code = "self_loop"


class DuplicateEdge(RainbowError):
    code = "duplicate_edge"


class UnknownVertex(RainbowError):
    code = "unknown_vertex"


class Disconnected(RainbowError):
    code = "disconnected"


class DisconnectedPrefix(RainbowError):
    code = "disconnected_prefix"


class EmptyStream(RainbowError):
    code = "empty_stream"


class IncompleteColoring(RainbowError):
    code = "incomplete_coloring"


class BudgetExceeded(RainbowError):
    code = "budget_exceeded"


class BadParameters(RainbowError):
    code = "bad_parameters"


class ParseError(RainbowError):
    code = "parse_error"


class ConfigError(RainbowError):
    code = "config_error"


class OracleSkipped(RainbowError):
    code = "oracle_skipped"
