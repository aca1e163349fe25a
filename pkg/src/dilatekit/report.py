"""Named residual checks and the reports the verification operations return."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["ResidualCheck", "ResidualReport"]


@dataclass(frozen=True)
class ResidualCheck:
    """One nonnegative residual judged against one tolerance."""

    name: str
    residual: float
    tolerance: float

    def __post_init__(self):
        if not math.isfinite(self.residual) or self.residual < 0.0:
            raise ValueError(f"check {self.name!r}: residual must be finite and >= 0")
        if not math.isfinite(self.tolerance) or self.tolerance <= 0.0:
            raise ValueError(f"check {self.name!r}: tolerance must be finite and > 0")

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


@dataclass(frozen=True)
class ResidualReport:
    """An ordered collection of named residual checks."""

    checks: tuple[ResidualCheck, ...]

    def check(self, name: str) -> ResidualCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def residual(self, name: str) -> float:
        return self.check(name).residual

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max(c.residual for c in self.checks)
