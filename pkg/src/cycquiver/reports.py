"""Structured verification reports.

Every check in this package returns a CheckReport: a named list of
assertions, each with a stable id so CI can pin individual ones.  Status is
"pass", "fail", or "assumed" (recorded as accepted without computation);
the report verdict fails exactly when some assertion fails.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class Assertion:
    id: str
    status: str  # "pass" | "fail" | "assumed"
    detail: str = ""


@dataclass(frozen=True)
class CheckReport:
    check: str
    weights: tuple[int, ...]
    assertions: tuple[Assertion, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "assertions", tuple(self.assertions))

    @property
    def verdict(self) -> str:
        return "fail" if any(a.status == "fail" for a in self.assertions) else "pass"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def failures(self) -> list[Assertion]:
        return [a for a in self.assertions if a.status == "fail"]

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "weights": list(self.weights),
            "assertions": [
                {"id": a.id, "status": a.status, "detail": a.detail}
                for a in self.assertions
            ],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"
