"""Exception types shared across the package.

Every domain failure raises a subclass of ShapeError so callers (CLI,
service) can map them to user-input errors in one place.
"""


class ShapeError(Exception):
    """Base class for all domain errors raised by this package."""


class ZeroVector(ShapeError):
    """A vector that must be invertible is zero, or negligible at scale."""


class NotAVector(ShapeError):
    """Operation is defined only for pure grade-1 multivectors."""


class DegenerateBasicGesture(ShapeError):
    """A leg of a basic gesture is zero, or negligible at scale."""


class NonpositiveTimestep(ShapeError):
    """Timestep weights require strictly positive gaps."""


class TooFewPoints(ShapeError):
    """A sampled gesture needs at least three points."""


class NonmonotoneTime(ShapeError):
    """Timestamps must be strictly increasing."""


class UnnormalizedTime(ShapeError):
    """Timestamps must start at 0 and end at 1."""


class ZeroDelta(ShapeError):
    """Consecutive sample points coincide; carries the offending index."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"zero displacement at point index {index}")


class ZeroScale(ShapeError):
    """Similarity transforms require a nonzero scale factor."""


class SampleMismatch(ShapeError):
    """Two samples must have equal length and equal timestamps."""


class WindowOutOfDomain(ShapeError):
    """A finite-difference window leaves the [0, 1] parameter interval."""


class MalformedGesture(ShapeError):
    """Gesture JSON does not match the point schema; carries the index."""

    def __init__(self, index: int | None, message: str):
        self.index = index
        super().__init__(message)


class EmptyStore(ShapeError):
    """Recognition requires at least one stored template."""


class MalformedStore(ShapeError):
    """Template store file is invalid; carries the offending template id."""

    def __init__(self, template_id: str | None, message: str):
        self.template_id = template_id
        super().__init__(message)


class StoreIOError(ShapeError):
    """Reading or writing the template store failed at the OS level."""
