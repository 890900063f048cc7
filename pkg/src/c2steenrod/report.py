from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a named structural check.

    ``known_issue`` marks an informational line that never fails a run.
    """

    name: str
    passed: bool
    detail: str = ""
    known_issue: bool = False

    def line(self) -> str:
        tag = "INFO" if self.known_issue else ("PASS" if self.passed else "FAIL")
        return f"[{tag}] {self.name}" + (f": {self.detail}" if self.detail else "")

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "known_issue": self.known_issue}
