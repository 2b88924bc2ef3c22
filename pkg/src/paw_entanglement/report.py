"""CheckRecord and VerifyReport: oracle suite execution records."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal


@dataclass(frozen=True)
class CheckRecord:
    """Single oracle check result."""

    name: str
    category: str
    samples: int
    max_error: float
    tolerance: float
    outcome: Literal["PASS", "FAIL", "INFO"]
    inputs: str | None = None

    def render(self) -> str:
        line = (
            f"{self.outcome:<4} {self.category:<12} {self.name:<44} "
            f"samples={self.samples:<5d} max_error={self.max_error:.3e} "
            f"tol={self.tolerance:.0e}"
        )
        if self.inputs:
            line += f"\n     inputs: {self.inputs}"
        return line


@dataclass
class VerifyReport:
    """Structured record of one verification run."""

    seed: int
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def failures(self) -> tuple[CheckRecord, ...]:
        return tuple(r for r in self.records if r.outcome == "FAIL")

    @property
    def outcome(self) -> Literal["PASS", "FAIL"]:
        return "FAIL" if self.failures else "PASS"

    def render(self) -> str:
        lines = [f"verify seed={self.seed}"]
        lines.extend(record.render() for record in self.records)
        lines.append(
            f"RESULT {self.outcome} ({len(self.records)} checks, "
            f"{len(self.failures)} failed)"
        )
        return "\n".join(lines) + "\n"
