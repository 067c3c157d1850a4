"""Exception types shared across the package."""


class RiskdriveError(Exception):
    """Base class for all errors raised by this package."""


class DegeneratePathError(RiskdriveError):
    """Reference path has fewer than 2 points or zero-length segments."""


class PoseOffCorridorError(RiskdriveError):
    """Pose is farther from the reference path than the allowed corridor."""


class OutOfPathRangeError(RiskdriveError):
    """Arclength query outside [0, path length]."""


class SingularCovarianceError(RiskdriveError):
    """Covariance matrix is numerically singular."""


class EmptyRiskSetError(RiskdriveError):
    """Cost requested over an empty participant risk set."""


class ModeMismatchError(RiskdriveError):
    """Cost function called with a config of the wrong mode."""


class DegenerateHorizonError(RiskdriveError):
    """Polynomial solve requested for a horizon too short to be well posed."""


class BufferUnderfilledError(RiskdriveError):
    """Replay buffer holds fewer transitions than the requested batch."""


class ScenarioParseError(RiskdriveError):
    """Scenario file is not valid JSON."""


class ScenarioValidationError(RiskdriveError):
    """Scenario file parsed but violates a schema invariant."""


class EmptyInputError(RiskdriveError):
    """Aggregation requested over an empty collection of logs."""


class MetricsIOError(RiskdriveError):
    """Metrics emission failed while writing output files."""
