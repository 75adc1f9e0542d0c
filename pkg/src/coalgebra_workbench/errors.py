"""Error handling and custom exceptions."""

from dataclasses import dataclass
from typing import Optional, Any, Dict, List

from sympy import isprime


@dataclass
class ErrorReport:
    """Standardized error document emitted by the CLI for exit code 2."""

    error_type: str  # "parse", "structural", "precondition", etc.
    message: str
    exit_code: int = 2
    location: Optional[str] = None
    details: Optional[dict] = None

    def to_dict(self) -> dict:
        """Convert to dictionary for the CLI report."""
        result = {
            "error_type": self.error_type,
            "message": self.message,
            "exit_code": self.exit_code,
        }
        if self.location:
            result["location"] = self.location
        if self.details:
            result["details"] = self.details
        return result


class WorkbenchError(Exception):
    """Base class of every error raised by the workbench."""

    error_type = "workbench"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def to_report(self) -> ErrorReport:
        return ErrorReport(
            error_type=self.error_type,
            message=self.message,
            details=self.details or None,
        )


class StructuralError(WorkbenchError):
    """Exception raised for shape, field or base-structure mismatches."""

    error_type = "structural"

    def __init__(self, message: str, field: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        """Initialize structural error.

        Args:
            message: Error message
            field: Name of the offending matrix or parameter (optional)
            details: Additional error details (optional)
        """
        self.field = field
        super().__init__(message, details)

    def to_report(self) -> ErrorReport:
        report = super().to_report()
        report.location = self.field
        return report


class MismatchError(StructuralError):
    """Two structures live over different coalgebras or algebras."""

    error_type = "mismatch"


class UnsupportedFieldError(StructuralError):
    """The requested base field is not available for this operation."""

    error_type = "unsupported_field"


class SingularMatrixError(WorkbenchError):
    """Raised when inverting a matrix that has no inverse."""

    error_type = "singular"


class PreconditionError(WorkbenchError):
    """An operation that needs certified input received an uncertified one."""

    error_type = "precondition"


class InvariantError(WorkbenchError):
    """A guaranteed identity failed; this points at a bug in the workbench."""

    error_type = "invariant"


class ParseError(WorkbenchError):
    """Exception raised while reading a structure file."""

    error_type = "parse"

    def __init__(self, message: str, location: str = "$", details: Optional[Dict[str, Any]] = None):
        """Initialize parse error.

        Args:
            message: Error message
            location: JSON path of the offending value (e.g. ``$.rho[2][1]``)
            details: Additional error details (optional)
        """
        self.location = location
        self.reason = message
        super().__init__(f"{location}: {message}", details)

    def to_report(self) -> ErrorReport:
        report = super().to_report()
        report.location = self.location
        return report


class MalformedDocumentError(ParseError):
    error_type = "malformed_document"


class UnknownKindError(ParseError):
    error_type = "unknown_kind"


class ShapeMismatchError(ParseError):
    error_type = "shape_mismatch"


class FieldElementError(ParseError):
    error_type = "bad_field_element"


class FieldSpecError(ParseError):
    error_type = "bad_field"


# ============================================================================
# Validation Helpers
# ============================================================================

def validate_dimension(value: Any, field_name: str) -> None:
    """Validate that a dimension is a non-negative integer.

    Args:
        value: Value to validate
        field_name: Name of the field for error messages

    Raises:
        StructuralError: If value is not a non-negative int
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise StructuralError(
            f"{field_name} must be an integer",
            field=field_name,
            details={"validation": "integer", "value": repr(value)}
        )
    if value < 0:
        raise StructuralError(
            f"{field_name} must be non-negative",
            field=field_name,
            details={"validation": "non_negative", "value": value}
        )


def validate_shape(matrix: Any, rows: int, cols: int, field_name: str) -> None:
    """Validate that a matrix has the shape its structure requires.

    Args:
        matrix: Matrix to validate
        rows: Expected number of rows
        cols: Expected number of columns
        field_name: Name of the matrix for error messages

    Raises:
        StructuralError: If the shape differs
    """
    if (matrix.rows, matrix.cols) != (rows, cols):
        raise StructuralError(
            f"{field_name} must be {rows}x{cols}, got {matrix.rows}x{matrix.cols}",
            field=field_name,
            details={"validation": "shape", "expected": [rows, cols], "actual": [matrix.rows, matrix.cols]}
        )


def validate_same_field(first: Any, second: Any, field_name: str) -> None:
    """Validate that two matrices or structures share a base field.

    Raises:
        StructuralError: If the fields differ
    """
    if first.field != second.field:
        raise StructuralError(
            f"{field_name}: cannot mix {first.field.label} and {second.field.label}",
            field=field_name,
            details={"validation": "field", "left": first.field.label, "right": second.field.label}
        )


def validate_same_base(first: Any, second: Any, what: str) -> None:
    """Validate that two structures live over the same (co)algebra.

    Raises:
        MismatchError: If the bases differ
    """
    if first != second:
        raise MismatchError(
            f"{what} must be over the same base",
            field=what,
            details={"validation": "base"}
        )


def validate_choice(value: Any, field_name: str, choices: List[Any]) -> None:
    """Validate that a value is one of the allowed choices.

    Args:
        value: Value to validate
        field_name: Name of the field for error messages
        choices: List of allowed values

    Raises:
        StructuralError: If value is not in the allowed choices
    """
    if value not in choices:
        raise StructuralError(
            f"{field_name} must be one of: {', '.join(str(c) for c in choices)}",
            field=field_name,
            details={"validation": "choice", "choices": choices, "value": value}
        )


def validate_prime(value: Any, field_name: str) -> None:
    """Validate that a characteristic is a prime number.

    Raises:
        UnsupportedFieldError: If value is not a prime int
    """
    if isinstance(value, bool) or not isinstance(value, int) or not isprime(value):
        raise UnsupportedFieldError(
            f"GF(p) needs a prime p, got {value!r}",
            field=field_name,
            details={"validation": "prime", "value": repr(value)}
        )
