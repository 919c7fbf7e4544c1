"""Exception types raised across the package."""


class ConvexMatroidError(Exception):
    pass


class NonGenericWitnessError(ConvexMatroidError, ValueError):
    """A functional lies (numerically) on one of the arrangement's hyperplanes."""


class LPConvergenceError(ConvexMatroidError, RuntimeError):
    """The margin LP failed to terminate; distinct from infeasibility."""


class DegenerateArrangementError(ConvexMatroidError, RuntimeError):
    pass


class EnumerationLimitError(ConvexMatroidError):
    """Exhaustive enumeration refused because it would exceed the configured cap."""


class DimensionError(ConvexMatroidError, ValueError):
    pass


class InstanceParseError(ConvexMatroidError, ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
