"""Pass/fail reports shared by the axiom checkers and witness verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .linalg import Matrix, unflatten_index


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    at: tuple | None = None  # offending basis tuple of the input space
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.at is not None:
            out["at"] = list(self.at)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    subject: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def add(self, check: Check) -> "Report":
        self.checks.append(check)
        return self

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)
        return self

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"subject": self.subject, "pass": self.passed,
                "checks": [c.to_json() for c in self.checks], "notes": list(self.notes)}

    def __str__(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            where = f" at {c.at}" if c.at is not None else ""
            extra = f" ({c.detail})" if c.detail else ""
            lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}{where}{extra}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def compare(name: str, lhs: Matrix, rhs: Matrix, in_dims: Sequence[int] = ()) -> Check:
    """Equality of two maps; on failure report the first input basis tuple that differs."""
    if lhs.shape != rhs.shape:
        return Check(name, False, detail=f"shape {lhs.shape} vs {rhs.shape}")
    for j in range(lhs.cols):
        for i in range(lhs.rows):
            if lhs[i, j] != rhs[i, j]:
                at = unflatten_index(j, in_dims) if in_dims else (j,)
                return Check(name, False, at=at)
    return Check(name, True)
