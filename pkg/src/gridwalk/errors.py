"""Exception hierarchy.

Every error raised by the package derives from GridwalkError so callers can
catch one base. Config/usage problems derive from ConfigError (CLI exit 1);
everything else maps to a runtime failure (CLI exit 2).
"""


class GridwalkError(Exception):
    """Base class for all gridwalk errors."""


# --- graph construction / queries ---


class SelfLoopError(GridwalkError):
    pass


class DuplicateEdgeError(GridwalkError):
    pass


class OutOfRangeError(GridwalkError):
    pass


# --- generators ---


class InvalidProbabilityError(GridwalkError):
    pass


class InvalidMError(GridwalkError):
    pass


class InvalidKError(GridwalkError):
    pass


# --- centrality ---


class NoEdgesError(GridwalkError):
    pass


class NotConvergedError(GridwalkError):
    pass


# --- routing ---


class NoSourcesError(GridwalkError):
    pass


class MissingCentralityError(GridwalkError):
    pass


class NotRunningError(GridwalkError):
    pass


# --- experiments ---


class ComponentTooSmallError(GridwalkError):
    pass


class ZeroTargetsError(GridwalkError):
    pass


class DivisionByZeroError(GridwalkError):
    pass


class RunError(GridwalkError):
    """A run inside run_config failed; carries the offending run index."""

    def __init__(self, run_index, cause):
        super().__init__(f"run {run_index}: {cause}")
        self.run_index = run_index
        self.cause = cause


# --- config / CLI (exit code 1) ---


class ConfigError(GridwalkError):
    pass


class UnknownKeyError(ConfigError):
    pass


class BadValueError(ConfigError):
    pass


class MissingRequiredError(ConfigError):
    pass


class EmptyGridError(ConfigError):
    pass


# --- rendering ---


class EmptySeriesError(GridwalkError):
    pass
