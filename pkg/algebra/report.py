# algebra/report.py
"""Pass/fail records shared by every verification routine."""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class Check:
    """One named check. ``counterexample`` holds element names when a cochain identity fails."""

    check: str
    passed: bool
    degree: Optional[int] = None
    counterexample: Optional[Tuple[str, ...]] = None
    note: Optional[str] = None

    def __post_init__(self):
        if not self.passed and self.degree is not None and self.counterexample is None:
            raise ValueError(f"failing check {self.check} at degree {self.degree} needs a counterexample")

    def to_json(self) -> dict:
        out = {"check": self.check, "pass": self.passed}
        if self.degree is not None:
            out["degree"] = self.degree
        if self.counterexample is not None:
            out["counterexample"] = list(self.counterexample)
        if self.note:
            out["note"] = self.note
        return out


# Identity reports of the cyclic module use the same record.
CyclicReport = Check


def all_passed(checks: Sequence[Check]) -> bool:
    return all(c.passed for c in checks)


def failures(checks: Sequence[Check]) -> List[Check]:
    return [c for c in checks if not c.passed]


def summary_line(title: str, checks: Sequence[Check]) -> str:
    bad = failures(checks)
    if not bad:
        return f"✅ {title}: {len(checks)} checks passed"
    return f"❌ {title}: {len(bad)} of {len(checks)} checks failed ({', '.join(c.check for c in bad[:5])})"
