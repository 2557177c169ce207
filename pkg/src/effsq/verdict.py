from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class Verdict:
    """Outcome of one instance check.

    ``vacuous`` marks a pass whose premise did not hold; suites count those
    separately so they never stand in for evidence.
    """

    passed: bool
    witness: Optional[dict[str, Any]] = field(default=None, compare=False)
    vacuous: bool = False

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError("a failed verdict needs a counterexample witness")

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def ok(cls, **witness) -> "Verdict":
        return cls(True, witness or None)

    @classmethod
    def fail(cls, **witness) -> "Verdict":
        return cls(False, witness)

    @classmethod
    def vacuous_pass(cls, reason: str) -> "Verdict":
        return cls(True, {"reason": reason}, vacuous=True)
