"""Verification report models shared by all suites."""

from typing import Any, Dict, List

from pydantic import BaseModel, Field

from quivers.quiver import Functional, Quiver


class Discrepancy(BaseModel):
    """One failed comparison."""

    check: str = Field(..., description="Name of the identity being checked")
    location: str = Field(..., description="Where it failed, e.g. a dimension vector")
    expected: str
    actual: str


class Report(BaseModel):
    """Outcome of a verification suite; empty discrepancies means success."""

    suite: str
    subject: str = ""
    checks: int = 0
    discrepancies: List[Discrepancy] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def compare(self, check: str, location: str, expected: Any, actual: Any) -> bool:
        """Count one comparison and record it if the values differ."""
        self.checks += 1
        if expected == actual:
            return True
        self.discrepancies.append(
            Discrepancy(
                check=check,
                location=location,
                expected=str(expected),
                actual=str(actual),
            )
        )
        return False

    def fail(self, check: str, location: str, expected: Any, actual: Any) -> None:
        self.checks += 1
        self.mismatch(check, location, expected, actual)

    def mismatch(self, check: str, location: str, expected: Any, actual: Any) -> None:
        """Record a difference found inside a check that was already counted."""
        self.discrepancies.append(
            Discrepancy(
                check=check,
                location=location,
                expected=str(expected),
                actual=str(actual),
            )
        )

    def merge(self, other: "Report") -> "Report":
        self.checks += other.checks
        self.discrepancies.extend(other.discrepancies)
        return self


def run_subject(quiver: Quiver, theta: Functional, order: int) -> str:
    return f"quiver={quiver.vertices} theta={theta.weights} N={order}"
