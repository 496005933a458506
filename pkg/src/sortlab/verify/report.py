"""Verdict record shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    """Outcome of one property check.

    ``instance`` describes what was checked (machine, sizes, value domain,
    depth bound).  A failing report always carries a replayable
    counterexample: enough of (machine, initial array, action list, index)
    to reproduce the violation.  ``stats`` holds coverage counters.
    """

    prop: str
    instance: dict[str, Any]
    passed: bool
    counterexample: dict[str, Any] | None = None
    stats: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "property": self.prop,
            "instance": self.instance,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "stats": self.stats,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "CheckReport":
        return cls(
            prop=data["property"],
            instance=dict(data.get("instance", {})),
            passed=bool(data["passed"]),
            counterexample=data.get("counterexample"),
            stats=dict(data.get("stats", {})),
        )
