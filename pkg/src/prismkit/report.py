"""Validation reports shared by every checker in the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    kind: str
    where: Any
    message: str = ""

    def __str__(self) -> str:
        text = f"{self.kind}: {self.where}"
        return f"{text} ({self.message})" if self.message else text


@dataclass
class ValidationReport:
    """Outcome of a validation pass.

    Violations are data: a checker never raises on a malformed object, it
    records what is wrong.  ``details`` carries by-products of the check
    (boundary counts, edge classes, ...) that callers may want to reuse.
    """

    violations: list[Violation] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, where: Any, message: str = "") -> None:
        self.violations.append(Violation(kind, where, message))

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


class InvalidInput(ValueError):
    """Raised when an operation requires a valid object and gets an invalid one."""

    def __init__(self, what: str, report: ValidationReport):
        super().__init__(f"invalid {what}: {report}")
        self.report = report
