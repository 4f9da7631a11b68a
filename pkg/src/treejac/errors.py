"""Exception hierarchy for curve, degree, and enumeration failures."""

from __future__ import annotations


class CurveError(Exception):
    """Base class for every error raised by this package."""


class InvalidComponent(CurveError):
    """Component data violates its invariants (h < 1, genus < 0, empty id)."""


class DuplicateId(CurveError):
    """Two components or two nodes share an identifier."""


class DanglingNodeReference(CurveError):
    """A node joins a component id that does not exist."""


class SelfLoop(CurveError):
    """A node joins a component to itself."""


class CycleDetected(CurveError):
    """The dual graph contains a cycle, so some node is not disconnecting."""


class DisconnectedCurve(CurveError):
    """The dual graph is not connected."""


class EmptySubcurve(CurveError):
    """A subcurve must contain at least one component."""


class UnknownComponent(CurveError):
    """A referenced component id is not part of the curve."""


class UnknownNode(CurveError):
    """A referenced node id is not part of the curve."""


class FullCurve(CurveError):
    """The whole curve was passed where a proper subcurve is required."""


class DisconnectedSubcurve(CurveError):
    """A connected subcurve is required here."""


class NotAdmissible(CurveError):
    """A component sequence fails the admissible-ordering condition."""

    def __init__(self, index, offenders=frozenset(), message=None):
        self.index = index
        self.offenders = frozenset(offenders)
        super().__init__(message or f"ordering fails at position {index}")


class IndexOutOfRange(CurveError):
    """An attachment index lies outside 1..N-1."""


class NotFinal(CurveError):
    """The subcurve still has an integral attachment ratio, so it must be split."""


class NotAWall(CurveError):
    """A split was requested where the attachment ratio is not an integer."""


class DegreeMismatch(CurveError):
    """Assigned degrees are inconsistent with the expected total."""


class NotSemistable(CurveError):
    """A graded decomposition exists only for semistable profiles."""


class NonPositivePolarization(CurveError):
    """Polarization degrees must be positive integers."""


class SweepTooLarge(CurveError):
    """The requested lattice sweep exceeds the configured point cap."""


class TooManyComponents(CurveError):
    """Exhaustive subcurve enumeration is capped to small curves."""


class CurveFileError(CurveError):
    """A curve description file is malformed."""
