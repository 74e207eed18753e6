# application/exit_codes.py
from domain.routh.entities import StabilityVerdict, VerdictOutcome
from core.exceptions import (
    CommandValidationError,
    DegenerateInputError,
    DegreeMismatchError,
    OutputWriteError,
    ValidationError,
)


EXIT_HURWITZ = 0
EXIT_SUCCESS = 0
EXIT_NOT_HURWITZ = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_SOFTWARE = 70
EXIT_CANT_CREATE = 73

_VERDICT_EXIT_CODES = {
    VerdictOutcome.HURWITZ: EXIT_HURWITZ,
    VerdictOutcome.NOT_HURWITZ: EXIT_NOT_HURWITZ,
    VerdictOutcome.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


def verdict_exit_code(verdict: StabilityVerdict) -> int:
    return _VERDICT_EXIT_CODES[verdict.outcome]


def error_exit_code(error: BaseException) -> int:
    """Process exit status for a failed invocation"""
    if isinstance(error, CommandValidationError):
        return EXIT_USAGE
    if isinstance(error, (ValidationError, DegenerateInputError, DegreeMismatchError)):
        return EXIT_DATA
    if isinstance(error, OutputWriteError):
        return EXIT_CANT_CREATE
    # DivergenceError, RootFindingError and anything unexpected
    return EXIT_SOFTWARE
