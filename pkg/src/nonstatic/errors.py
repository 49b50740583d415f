"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A model parameter violates its domain constraint.

    ``field`` names the offending parameter so front ends can point at
    the right flag or config key.
    """

    def __init__(self, field, message):
        super().__init__(message)
        self.field = field


class CapabilityError(RuntimeError):
    """Requested computation exceeds a configured capability limit."""


class AccuracyError(RuntimeError):
    """A numerical routine could not reach its accuracy target."""


class UndefinedStatisticsError(ArithmeticError):
    """Photon statistics are undefined because the mean photon number is zero."""
