"""
upb-lab Error System: Structured error codes and levels for machine-readable diagnostics.

Error Code Format: E{stage}{category}{sequence}
- Stage: 01=Linalg, 02=Model, 03=Search, 04=States, 05=Structure, 09=System
- Category: 0/1=Input/Parse, 2/3=Execution, 4/5=Reference, 6/7=Shape, 8/9=System
- Sequence: 1-9

Example: E0201 = Model Input/Parse Error #1
"""

from enum import Enum
from typing import Any, Optional, Dict, List
from dataclasses import dataclass, field
from rich.console import Console


class ErrorLevel(str, Enum):
    """Severity level for diagnostics."""
    ERROR = "error"       # Blocks the operation
    WARNING = "warning"   # Reported, operation continues
    INFO = "info"
    HINT = "hint"

    def __str__(self) -> str:
        return self.value


class ErrorCode(str, Enum):
    """
    Error codes for upb-lab.

    Format: E{stage}{category}{number}
    - Stage: 01 Linalg, 02 Model, 03 Search, 04 States, 05 Structure, 09 System
    - Category digit:
      - 0/1 = Input/Parse
      - 2/3 = Execution
      - 4/5 = Reference
      - 6/7 = Shape
      - 8/9 = System
    """

    # Linalg (E01xx)
    E0101 = "E0101"  # Non-Hermitian input
    E0161 = "E0161"  # Matrix shape mismatch

    # Model (E02xx)
    E0201 = "E0201"  # UOM parse error
    E0221 = "E0221"  # Constraints unsatisfiable
    E0241 = "E0241"  # Unknown variable
    E0242 = "E0242"  # Unknown catalog entry
    E0251 = "E0251"  # Lint: asymmetric constraint (warning)
    E0252 = "E0252"  # Lint: unconstrained variable (warning)
    E0253 = "E0253"  # Lint: primed label without unprimed occurrence (warning)

    # Search (E03xx)
    E0321 = "E0321"  # Rows not pairwise orthogonal
    E0322 = "E0322"  # Assignment budget exceeded
    E0341 = "E0341"  # Row index out of range
    E0361 = "E0361"  # Party arity mismatch
    E0362 = "E0362"  # Invalid party split

    # States (E04xx)
    E0421 = "E0421"  # Set too large for a complement state
    E0441 = "E0441"  # Partial transpose side is not a union of parties

    # Structure (E05xx)
    E0501 = "E0501"  # Bad arity for maxsum
    E0502 = "E0502"  # Oracle input too large
    E0561 = "E0561"  # Wrong shape for structural predicates

    # System (E09xx)
    E0981 = "E0981"  # Internal error
    E0982 = "E0982"  # File system error
    E0983 = "E0983"  # Configuration error

    def __str__(self) -> str:
        return self.value

    @property
    def stage(self) -> str:
        """Get the pipeline stage for this error code."""
        stage_map = {
            "01": "Linalg",
            "02": "Model",
            "03": "Search",
            "04": "States",
            "05": "Structure",
            "09": "System",
        }
        return stage_map.get(self.value[1:3], "Unknown")

    @property
    def category(self) -> str:
        """Get the error category based on the third digit."""
        cat_digit = self.value[3]
        if cat_digit in "01":
            return "Input/Parse"
        elif cat_digit in "23":
            return "Execution"
        elif cat_digit in "45":
            return "Reference"
        elif cat_digit in "67":
            return "Shape"
        elif cat_digit in "89":
            return "System"
        return "Unknown"

    @property
    def default_level(self) -> ErrorLevel:
        """Get the default severity level for this error code."""
        warning_codes = {ErrorCode.E0251, ErrorCode.E0252, ErrorCode.E0253}
        return ErrorLevel.WARNING if self in warning_codes else ErrorLevel.ERROR


ERROR_TEMPLATES: Dict[ErrorCode, str] = {
    ErrorCode.E0101: "Matrix is not Hermitian: {details}",
    ErrorCode.E0161: "Matrix shape mismatch: {details}",

    ErrorCode.E0201: "Cannot parse UOM: {details}",
    ErrorCode.E0221: "Constraints of '{spec}' unsatisfiable after {rounds} rounds",
    ErrorCode.E0241: "Unknown variable '{variable}'",
    ErrorCode.E0242: "Unknown catalog entry '{name}'",
    ErrorCode.E0251: "Constraint on '{variable}' forbids {present} but not {missing}",
    ErrorCode.E0252: "Variable '{variable}' carries no constraint",
    ErrorCode.E0253: "Label '{variable}'' used but '{variable}' never appears unprimed",

    ErrorCode.E0321: "Rows {i} and {j} are not orthogonal",
    ErrorCode.E0322: "Search needs {assignments} assignments, budget is {budget}; pass --force",
    ErrorCode.E0341: "Row index {index} out of range 1..{rows}",
    ErrorCode.E0361: "Party arity mismatch: {details}",
    ErrorCode.E0362: "Invalid split: {details}",

    ErrorCode.E0421: "Set of {rows} vectors fills the {dim}-dimensional space",
    ErrorCode.E0441: "Side {side} is not a union of parties of {split}",

    ErrorCode.E0501: "maxsum needs p >= 2n >= 2, got p={p}, n={n}",
    ErrorCode.E0502: "Oracle limited to p <= 24 and n <= 6, got p={p}, n={n}",
    ErrorCode.E0561: "Structural predicates need 8 rows of 4 qubits, got {rows} rows of {qubits}",

    ErrorCode.E0981: "Internal error: {details}",
    ErrorCode.E0982: "File system error: {details}",
    ErrorCode.E0983: "Configuration error: {details}",
}


class UpbLabError(Exception):
    """
    Base class for all upb-lab errors with machine-readable codes.

    Attributes:
        message: Human-readable error message
        code: Machine-readable error code (e.g., E0321)
        level: Severity level
        details: Additional structured data about the error
    """

    def __init__(
        self,
        message: str,
        code: ErrorCode = ErrorCode.E0981,
        level: Optional[ErrorLevel] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message)
        self.message = message
        self.code = code if isinstance(code, ErrorCode) else ErrorCode.E0981
        self.level = level if level is not None else self.code.default_level
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to dictionary for JSON serialization."""
        return {
            "code": str(self.code),
            "level": self.level.value,
            "message": self.message,
            "stage": self.code.stage,
            "category": self.code.category,
            "details": {k: _plain(v) for k, v in self.details.items()},
        }

    @classmethod
    def from_template(
        cls,
        code: ErrorCode,
        level: Optional[ErrorLevel] = None,
        **kwargs,
    ) -> "UpbLabError":
        """Create an error from a template with formatted message."""
        template = ERROR_TEMPLATES.get(code, "{details}")
        try:
            message = template.format(**kwargs)
        except KeyError:
            message = f"[{code}] {kwargs.get('details', 'Unknown error')}"
        return cls(message=message, code=code, level=level, details=kwargs)


def _plain(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


class _CodedError(UpbLabError):
    """Errors with a fixed code, built from the code's template."""
    code_value: ErrorCode = ErrorCode.E0981

    def __init__(self, message: Optional[str] = None, **kwargs):
        if message is None:
            template = ERROR_TEMPLATES.get(self.code_value, "{details}")
            try:
                message = template.format(**kwargs)
            except KeyError:
                message = str(kwargs.get("details", self.code_value))
        super().__init__(message, code=self.code_value, details=kwargs)


class NonHermitianInput(_CodedError):
    """Raised when a matrix that must be Hermitian is not."""
    code_value = ErrorCode.E0101


class ShapeMismatch(_CodedError):
    code_value = ErrorCode.E0161


class ParseError(_CodedError):
    """Raised when a UOM document is malformed. Carries `line` and `field` when known."""
    code_value = ErrorCode.E0201

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        super().__init__(message, line=line, field=field)
        self.line = line
        self.field = field


class ConstraintUnsatisfiable(_CodedError):
    code_value = ErrorCode.E0221


class UnknownVariable(_CodedError):
    code_value = ErrorCode.E0241


class UnknownCatalogEntry(_CodedError):
    code_value = ErrorCode.E0242


class NotOrthogonal(_CodedError):
    """Raised when a product vector set is not pairwise orthogonal."""
    code_value = ErrorCode.E0321


class BudgetExceeded(_CodedError):
    """Raised when a search would exceed the assignment budget."""
    code_value = ErrorCode.E0322


class IndexOutOfRange(_CodedError):
    code_value = ErrorCode.E0341


class ArityMismatch(_CodedError):
    code_value = ErrorCode.E0361


class BadSplit(_CodedError):
    code_value = ErrorCode.E0362


class SetTooLarge(_CodedError):
    code_value = ErrorCode.E0421


class BadSubset(_CodedError):
    code_value = ErrorCode.E0441


class BadArity(_CodedError):
    code_value = ErrorCode.E0501


class TooLarge(_CodedError):
    code_value = ErrorCode.E0502


class WrongShape(_CodedError):
    code_value = ErrorCode.E0561


# Diagnostic collection and reporting

@dataclass
class DiagnosticReport:
    """Collection of diagnostics, e.g. from a lint pass."""
    errors: List[UpbLabError] = field(default_factory=list)

    def add(self, error: UpbLabError) -> None:
        self.errors.append(error)

    def extend(self, errors: List[UpbLabError]) -> None:
        self.errors.extend(errors)

    def has_errors(self) -> bool:
        """Check if there are any ERROR level diagnostics."""
        return any(e.level == ErrorLevel.ERROR for e in self.errors)

    def by_level(self, level: ErrorLevel) -> List[UpbLabError]:
        return [e for e in self.errors if e.level == level]

    def by_code(self, code: ErrorCode) -> List[UpbLabError]:
        return [e for e in self.errors if e.code == code]

    def to_dict_list(self) -> List[Dict[str, Any]]:
        return [e.to_dict() for e in self.errors]

    def __iter__(self):
        return iter(self.errors)

    def __len__(self) -> int:
        return len(self.errors)


def print_diagnostic(console: Console, error: UpbLabError):
    """Print a diagnostic message in a compiler-like style."""
    color_map = {
        ErrorLevel.ERROR: "red",
        ErrorLevel.WARNING: "yellow",
        ErrorLevel.INFO: "blue",
        ErrorLevel.HINT: "dim",
    }
    color = color_map.get(error.level, "red")

    console.print(f"[{color} bold][{error.code}] {error.level.value.capitalize()}: {error.message}[/{color} bold]")

    for key, value in error.details.items():
        if key not in ["details", "message"] and value is not None:
            console.print(f"  [dim]{key}: {value}[/dim]")

    if error.__cause__:
        console.print(f"  [dim]Caused by: {error.__cause__}[/dim]")


def print_diagnostic_report(console: Console, report: DiagnosticReport):
    """Print a full diagnostic report."""
    if not report.errors:
        console.print("[green]✓ No diagnostics[/green]")
        return

    errors = report.by_level(ErrorLevel.ERROR)
    warnings = report.by_level(ErrorLevel.WARNING)
    console.print(f"  [red]Errors: {len(errors)}[/red]  [yellow]Warnings: {len(warnings)}[/yellow]")
    for error in report.errors:
        print_diagnostic(console, error)
