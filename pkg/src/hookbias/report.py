"""Structured outcome of a verification campaign."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

__all__ = ["CheckReport", "GRADES"]

# theorem: a failure is a bug. paper-verified-range: the paper checked it
# numerically. conjecture: a failure is a finding. informational: no assertion.
GRADES = ("theorem", "paper-verified-range", "conjecture", "informational")


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    if isinstance(x, float):
        return x
    return str(x)


@dataclass
class CheckReport:
    campaign: str
    params: dict[str, Any] = field(default_factory=dict)
    range: tuple[int, int] = (0, 0)
    grade: str = "theorem"
    violations: list[tuple[int, Any, Any]] = field(default_factory=list)
    witnesses: list[tuple[int, Any]] = field(default_factory=list)
    status: str = "pending"
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.grade not in GRADES:
            raise ValueError(f"unknown grade {self.grade!r}")

    def add_violation(self, n: int, lhs, rhs=None):
        self.violations.append((n, lhs, rhs))

    def add_witness(self, n: int, values):
        self.witnesses.append((n, values))

    def finish(self) -> "CheckReport":
        if self.grade == "informational":
            self.status = "informational"
        else:
            self.status = "fail" if self.violations else "pass"
        return self

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "informational")

    @property
    def assertion_failure(self) -> bool:
        """Only theorem-grade and paper-range failures are treated as errors."""
        return self.status == "fail" and self.grade in ("theorem", "paper-verified-range")

    def to_dict(self) -> dict:
        return _jsonable({
            "check-name": self.campaign,
            "params": self.params,
            "n-range": list(self.range),
            "grade": self.grade,
            "status": self.status,
            "violations": [{"n": n, "lhs": lhs, "rhs": rhs, "detail": f"{lhs} vs {rhs}"}
                           for n, lhs, rhs in self.violations],
            "witnesses": [{"n": n, "values": v} for n, v in self.witnesses],
            "witness-counts": len(self.witnesses),
            "notes": self.notes,
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_table(self) -> str:
        lines = [f"{self.campaign}  [{self.grade}]  n in {self.range[0]}..{self.range[1]}"
                 f"  status={self.status}"]
        lines.append("  params: " + ", ".join(f"{k}={v}" for k, v in sorted(self.params.items())))
        lines.append(f"  violations: {len(self.violations)}")
        for n, lhs, rhs in self.violations[:20]:
            lines.append(f"    n={n}  {lhs}  vs  {rhs}")
        if len(self.violations) > 20:
            lines.append(f"    ... {len(self.violations) - 20} more")
        for n, v in self.witnesses:
            lines.append(f"  witness n={n}: {v}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)
