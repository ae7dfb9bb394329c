"""Exception hierarchy. Every error carries a stable machine-readable ``code``."""

from __future__ import annotations


class WaringError(ValueError):
    code = "ERROR"


class DimensionMismatch(WaringError):
    code = "DIMENSION_MISMATCH"


class SizeGuardExceeded(WaringError):
    code = "SIZE_GUARD_EXCEEDED"


class ZeroVector(WaringError):
    code = "ZERO_VECTOR"


class DuplicatePoint(WaringError):
    code = "DUPLICATE_POINT"


class EmptyPointSet(WaringError):
    code = "EMPTY_POINT_SET"


class NotDisjoint(WaringError):
    code = "NOT_DISJOINT"


class PreconditionViolated(WaringError):
    code = "PRECONDITION_VIOLATED"


class WrongAmbientDimension(WaringError):
    code = "WRONG_AMBIENT_DIMENSION"


class ZeroWeight(WaringError):
    code = "ZERO_WEIGHT"


class NotMinimal(WaringError):
    code = "DECOMPOSITION_NOT_MINIMAL"


class NotInSpan(WaringError):
    code = "NOT_IN_SPAN"


class DegreeOutOfRange(WaringError):
    code = "DEGREE_OUT_OF_RANGE"


class UnknownGenerator(WaringError):
    code = "UNKNOWN_GENERATOR"


class MalformedInput(WaringError):
    code = "MALFORMED_INPUT"


class UnreadableFile(WaringError):
    code = "FILE_NOT_READABLE"


class InternalConsistencyError(AssertionError):
    """Two independent computations that must agree did not."""

    code = "INTERNAL_CONSISTENCY"
