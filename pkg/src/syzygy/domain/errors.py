"""Domain error codes and exception hierarchy."""

from __future__ import annotations

from enum import IntEnum


class ErrorCode(IntEnum):
    """Error codes shared by services and the command line.

    The first two double as process exit codes.
    """

    REFUSAL = 2
    MISMATCH = 3

    # Input errors
    DIMENSION_MISMATCH = 10
    RING_MISMATCH = 11
    NOT_HOMOGENEOUS = 12
    PARSE_ERROR = 13

    # Refusals raised by individual services
    REIDER_INAPPLICABLE = 20
    RESOURCE_CEILING = 21
    TRUNCATION_EXCEEDED = 22
    UNSUPPORTED_FIELD = 23
    UNKNOWN_LABEL = 24
    UNCLASSIFIED = 25
    MALFORMED_TABLE = 26
    EMPTY_SYSTEM = 27
    DEGENERATE_DRAW = 28
    RESEED_EXHAUSTED = 29

    @property
    def exit_code(self) -> int:
        """Exit status used by the command line for this code."""
        return 3 if self is ErrorCode.MISMATCH else 2


class SyzygyError(Exception):
    """Base class of every workbench error."""

    code: ErrorCode = ErrorCode.REFUSAL

    def __init__(self, message: str, *, code: ErrorCode | None = None) -> None:
        super().__init__(message)
        if code is not None:
            self.code = code

    def to_dict(self) -> dict[str, object]:
        """Convert to dictionary."""
        return {"error": type(self).__name__, "code": int(self.code), "message": str(self)}


class DimensionMismatchError(SyzygyError, ValueError):
    """Matrix or vector shapes do not agree."""

    code = ErrorCode.DIMENSION_MISMATCH


class RingMismatchError(SyzygyError, ValueError):
    """Operands live in different polynomial rings or lattices."""

    code = ErrorCode.RING_MISMATCH


class NotHomogeneousError(SyzygyError, ValueError):
    """A homogeneous polynomial was required."""

    code = ErrorCode.NOT_HOMOGENEOUS


class ParseError(SyzygyError, ValueError):
    """Text input could not be parsed."""

    code = ErrorCode.PARSE_ERROR


class RefusalError(SyzygyError):
    """A precondition was not met and the computation was refused."""

    code = ErrorCode.REFUSAL


class ReiderInapplicableError(RefusalError):
    code = ErrorCode.REIDER_INAPPLICABLE


class ResourceCeilingError(RefusalError):
    code = ErrorCode.RESOURCE_CEILING


class TruncationExceededError(RefusalError):
    code = ErrorCode.TRUNCATION_EXCEEDED


class UnsupportedFieldError(RefusalError):
    code = ErrorCode.UNSUPPORTED_FIELD


class UnknownLabelError(RefusalError):
    code = ErrorCode.UNKNOWN_LABEL


class UnclassifiedError(RefusalError):
    code = ErrorCode.UNCLASSIFIED


class MalformedTableError(RefusalError):
    code = ErrorCode.MALFORMED_TABLE


class EmptyLinearSystemError(RefusalError):
    code = ErrorCode.EMPTY_SYSTEM


class DegenerateDrawError(SyzygyError):
    """A random draw violated a general-position predicate; callers reseed."""

    code = ErrorCode.DEGENERATE_DRAW


class ReseedError(RefusalError):
    """Every reseed attempt produced a degenerate draw."""

    code = ErrorCode.RESEED_EXHAUSTED
