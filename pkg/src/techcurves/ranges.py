"""Ordered lo/mid/hi output envelope."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidRange


@dataclass(frozen=True)
class ProjectionRange:
    """A (lo, mid, hi) envelope in the unit of the projected quantity."""

    lo: float
    mid: float
    hi: float

    def __post_init__(self):
        if not (self.lo <= self.mid <= self.hi):
            raise InvalidRange(
                f"range must satisfy lo <= mid <= hi, got ({self.lo}, {self.mid}, {self.hi})"
            )

    @classmethod
    def degenerate(cls, value: float) -> "ProjectionRange":
        return cls(value, value, value)
