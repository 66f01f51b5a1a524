"""Exception types shared across the planner."""


class PlannerError(Exception):
    """Base class for all terraplan errors."""


class CloudParseError(PlannerError):
    """A point cloud file could not be parsed."""

    def __init__(self, path, line_no, message):
        self.path = path
        self.line_no = line_no
        super().__init__(f"{path}:{line_no}: {message}")


class EmptyCloudError(PlannerError):
    """Operation requires a non-empty point cloud."""


class EmptyRegionError(PlannerError):
    """Ellipsoid fetch returned too few points to fit a plane."""


class OutOfBoundsError(PlannerError):
    """Query state lies outside the terrain grid's XY bounds."""


class ChartBoundaryError(PlannerError):
    """Body z-axis too close to horizontal for the unit-disk chart."""


class OutOfDomainError(PlannerError):
    """Evaluation time outside the trajectory's duration."""


class SingularSystemError(PlannerError):
    """Spline coefficient system is singular (non-positive duration)."""


class NonPositiveDurationError(PlannerError):
    """Duration must be strictly positive."""


class NoPathError(PlannerError):
    """Front-end search exhausted the open set without reaching the goal."""


class StartOrGoalInvalidError(PlannerError):
    """Start or goal state is not on traversable terrain."""


class DegeneratePathError(PlannerError):
    """Path has zero length and cannot seed a trajectory."""


class NumericalFailureError(PlannerError):
    """Non-finite value encountered at an accepted iterate."""
