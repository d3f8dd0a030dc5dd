"""Exception types raised across the package."""


class UavRouteError(Exception):
    """Base class for every error raised by uavroute."""


class DimensionMismatch(UavRouteError, ValueError):
    pass


class EndpointMismatch(UavRouteError, ValueError):
    pass


class StartBlocked(UavRouteError):
    pass


class GoalBlocked(UavRouteError):
    pass


class NoPath(UavRouteError):
    pass


class ScenarioSyntaxError(UavRouteError, ValueError):
    """Malformed line in a scenario file."""

    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class ValidationError(UavRouteError, ValueError):
    pass


class DuplicateKey(ScenarioSyntaxError):
    pass


class GenerationFailed(UavRouteError, RuntimeError):
    pass


class EmptyHistory(UavRouteError, ValueError):
    pass
