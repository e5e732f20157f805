"""Exception types shared across the arcspline package."""

from typing import TYPE_CHECKING, List, Optional

if TYPE_CHECKING:
    from arcspline.models.types import ValidationIssue


class ArcDomainError(ValueError):
    """Raised when a geometric operation is called outside its domain."""


class ParseError(Exception):
    """Raised when a polyarc document is not well-formed JSON."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None) -> None:
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class PolyarcValidationError(ValueError):
    """Raised when a parsed document violates polyarc invariants."""

    def __init__(self, issues: List["ValidationIssue"]) -> None:
        self.issues = list(issues)
        lines = "; ".join(f"[{i.code}] {i.message}" for i in self.issues)
        super().__init__(f"invalid polyarc document: {lines}")

    @property
    def codes(self) -> List[str]:
        return [i.code for i in self.issues]


class GssIterationError(RuntimeError):
    """Raised when golden-section search hits its iteration limit."""
