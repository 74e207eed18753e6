# core/exceptions.py
from typing import Optional, Dict, Any


class DomainException(Exception):
    """Base domain exception"""
    def __init__(self, message: str, error_code: str = "DOMAIN_ERROR"):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class ValidationError(DomainException):
    """Domain validation error"""
    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        super().__init__(message, "VALIDATION_ERROR")


class CoefficientParseError(ValidationError):
    """Malformed coefficient literal"""
    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        message = f"Cannot parse {text!r} at position {position}: expected {expected}"
        super().__init__(message, "coefficient")
        self.error_code = "PARSE_ERROR"


class DegenerateInputError(DomainException):
    """Input outside the domain of an operation (zero leading term, degree 0, singular system)"""
    def __init__(self, what: str, details: Optional[str] = None):
        message = f"Degenerate input: {what}"
        if details:
            message += f" - {details}"
        super().__init__(message, "DEGENERATE_INPUT")


class DegreeMismatchError(DomainException):
    """Operation defined for a fixed degree only"""
    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        message = f"Expected a polynomial of degree {expected}, got degree {actual}"
        super().__init__(message, "DEGREE_MISMATCH")


class EarlyZeroError(DomainException):
    """Zero first-column entry in the classical Routh array"""
    def __init__(self, row: int):
        self.row = row
        message = f"Zero first-column entry in row {row} of the classical array"
        super().__init__(message, "EARLY_ZERO")


class RootFindingError(DomainException):
    """Root iteration did not converge"""
    def __init__(self, iterations: int, details: Optional[str] = None):
        self.iterations = iterations
        message = f"Root iteration did not converge after {iterations} sweeps"
        if details:
            message += f" - {details}"
        super().__init__(message, "ROOT_FINDING_FAILED")


class DivergenceError(DomainException):
    """Simulated state became non-finite"""
    def __init__(self, time: float):
        self.time = time
        message = f"Closed-loop state is no longer finite at t={time:.6g}"
        super().__init__(message, "DIVERGENCE")


# Application layer exceptions
class ApplicationException(Exception):
    """Base application exception"""
    def __init__(self, message: str, error_code: str = "APPLICATION_ERROR"):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class CommandValidationError(ApplicationException):
    """Command validation error"""
    def __init__(self, errors: Dict[str, Any]):
        self.errors = errors
        message = f"Command validation failed: {errors}"
        super().__init__(message, "COMMAND_VALIDATION_ERROR")


# Infrastructure exceptions
class InfrastructureException(Exception):
    """Base infrastructure exception"""
    def __init__(self, message: str, error_code: str = "INFRASTRUCTURE_ERROR"):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class OutputWriteError(InfrastructureException):
    """Result file could not be written"""
    def __init__(self, path: str, details: str):
        self.path = path
        message = f"Cannot write {path}: {details}"
        super().__init__(message, "OUTPUT_WRITE_ERROR")
