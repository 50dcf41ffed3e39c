"""Exception hierarchy.

The CLI maps these onto exit codes: parse/usage problems exit 1,
mathematical precondition failures exit 2, internal invariant
violations exit 3.
"""


class OnePlaceError(Exception):
    """Base class for every error raised by the package."""


class ParseError(OnePlaceError):
    """Malformed curve expression or curve file."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class PreconditionError(OnePlaceError, ValueError):
    """The input violates a mathematical precondition of the operation."""


class MultiplePlacesError(PreconditionError):
    def __init__(self, detail=""):
        msg = "multiple places at infinity"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class FieldObstructionError(PreconditionError):
    def __init__(self, detail=""):
        msg = "coefficient outside working field"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class InfiniteDimensionError(PreconditionError):
    """A quotient that was required to be finite-dimensional is not."""


class ImproperParametrizationError(PreconditionError):
    def __init__(self, map_degree):
        super().__init__(f"improper parametrization: the map has degree {map_degree}")
        self.map_degree = map_degree


class InsufficientTruncationError(OnePlaceError):
    """Series precision ran out before the requested quantity was determined."""

    def __init__(self, detail=""):
        msg = "insufficient truncation"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class InvariantViolation(OnePlaceError, AssertionError):
    """Two independently computed quantities disagree (an implementation bug)."""

    def __init__(self, name, left, right):
        super().__init__(f"invariant identity violated: {name} ({left} != {right})")
        self.name = name
        self.left = left
        self.right = right
