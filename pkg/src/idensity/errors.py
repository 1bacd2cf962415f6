"""Exception types shared across the package."""


class IdensityError(Exception):
    """Base class for every library-raised error."""


class ParseError(IdensityError):
    """Input text does not conform to one of the documented grammars."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnsupportedSparseIntersection(IdensityError):
    """Two distinct sparse atoms would have to share a normal-form term.

    Finiteness of such intersections is not decided by the rewriting used
    here, so the input is rejected instead of approximated.
    """


class NormalizationOverflow(IdensityError):
    """Normalization would exceed the explicit-enumeration or modulus cap."""


class GrammarOverflow(IdensityError):
    """A derived value law left the closed value-expression grammar."""


class PartitionViolation(IdensityError):
    """Sequence pieces fail to partition the naturals (or overlap at a point)."""


class MalformedInterval(IdensityError):
    """Interval endpoints are out of order."""


class InvalidGenerator(IdensityError):
    """Window generator fails the filter-membership admissibility test."""


class PreconditionViolation(IdensityError):
    """A documented operation precondition does not hold for the inputs."""


class InvariantBreach(IdensityError):
    """A checked internal invariant failed; indicates a bug, not a valid outcome."""


class GoldenMismatch(IdensityError):
    """A built-in reference computation deviated from its frozen expected values."""
