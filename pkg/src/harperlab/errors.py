"""Exception hierarchy for harperlab."""


class HarperLabError(Exception):
    """Base class for all library errors."""


class DimensionError(HarperLabError, ValueError):
    """Dimension out of range or mismatched between operands."""


class UnsupportedDimensionError(HarperLabError):
    """The requested algorithm is not available at this dimension."""


class InfeasibleError(HarperLabError, ValueError):
    """Parameters fall outside an operation's feasibility envelope."""


class FamilyParseError(HarperLabError, ValueError):
    """A family document could not be parsed."""

    def __init__(self, message: str, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)
