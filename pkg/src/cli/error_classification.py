"""Error classification for CLI commands.

Maps engine exceptions onto the exit-status contract: 0 success,
1 verification mismatch, 2 usage error, 3 internal-consistency failure.
"""

from enum import Enum
from typing import Tuple, Type

from src.char_classes.exceptions import BundleParseError, InvalidRankError
from src.chow_ring.exceptions import (
    AmbientMismatchError,
    ExponentError,
    FactorIndexError,
    InvalidAmbientError,
    NonNilpotentError,
)
from src.cli.exceptions import UsageError
from src.k3_families.exceptions import (
    GenusOutOfRangeError,
    InvalidPolarizationError,
    NotK3Error,
    ReferenceDataError,
    SearchBoundsError,
)
from src.riemann_roch.exceptions import (
    InternalConsistencyError,
    InvalidCompleteIntersectionError,
    ParityError,
)


class ErrorType(Enum):
    """Classification of failures for exit-status decisions."""

    # Computed values disagree with the reference values
    VERIFICATION_MISMATCH = "verification_mismatch"

    # Bad flags, unparseable input, or inputs outside an operation's domain
    USAGE = "usage"

    # Two exact computations that must agree did not
    INTERNAL = "internal"


EXIT_STATUS = {
    ErrorType.VERIFICATION_MISMATCH: 1,
    ErrorType.USAGE: 2,
    ErrorType.INTERNAL: 3,
}

USAGE_ERRORS: Tuple[Type[Exception], ...] = (
    UsageError,
    BundleParseError,
    InvalidAmbientError,
    AmbientMismatchError,
    FactorIndexError,
    ExponentError,
    InvalidRankError,
    InvalidCompleteIntersectionError,
    GenusOutOfRangeError,
    InvalidPolarizationError,
    NotK3Error,
    SearchBoundsError,
)

INTERNAL_ERRORS: Tuple[Type[Exception], ...] = (
    InternalConsistencyError,
    ParityError,
    NonNilpotentError,
    ReferenceDataError,
)


def classify_error(error: Exception) -> ErrorType:
    if isinstance(error, INTERNAL_ERRORS):
        return ErrorType.INTERNAL
    if isinstance(error, USAGE_ERRORS):
        return ErrorType.USAGE
    # Anything unclassified is a bug in the engine
    return ErrorType.INTERNAL


def exit_status_for(error: Exception) -> int:
    return EXIT_STATUS[classify_error(error)]


def error_prefix(error: Exception) -> str:
    error_type = classify_error(error)
    if error_type == ErrorType.INTERNAL:
        return "INTERNAL"
    if error_type == ErrorType.USAGE:
        return "usage error"
    return "verification mismatch"
