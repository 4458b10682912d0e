"""Uniform pass/fail carrier for every inequality check in the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class BoundReport:
    """Outcome of evaluating a single inequality ``lhs <= rhs``.

    ``context`` carries the parameters the check ran with (prime, level,
    type label, auxiliary ratios), keyed by name.  ``holds`` is always
    equivalent to ``lhs <= rhs``; the constructor enforces it.
    """

    name: str
    lhs: Any
    rhs: Any
    holds: bool
    context: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.holds != (self.lhs <= self.rhs):
            raise ValueError(f"inconsistent report {self.name!r}: "
                             f"holds={self.holds} but lhs={self.lhs}, rhs={self.rhs}")

    def __str__(self):
        verdict = "PASS" if self.holds else "FAIL"
        extra = " ".join(f"{k}={v}" for k, v in sorted(self.context.items()))
        line = f"{verdict} {self.name}: {self.lhs} <= {self.rhs}"
        return f"{line} [{extra}]" if extra else line


def compare(name: str, lhs, rhs, **context) -> BoundReport:
    """Build a report whose verdict is exactly ``lhs <= rhs``."""
    return BoundReport(name=name, lhs=lhs, rhs=rhs, holds=bool(lhs <= rhs),
                       context=context)
