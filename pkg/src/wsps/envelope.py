"""Non-increasing step functions over time and their areas."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Envelope:
    """Step function equal to ``heights[i]`` on ``(breakpoints[i-1], breakpoints[i]]``.

    The first step starts at 0 (closed) and the function is 0 past the last
    breakpoint.
    """

    breakpoints: tuple[float, ...]
    heights: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "breakpoints", tuple(self.breakpoints))
        object.__setattr__(self, "heights", tuple(self.heights))
        if not self.breakpoints or len(self.breakpoints) != len(self.heights):
            raise ValueError("envelope needs equally many breakpoints and heights, at least one")
        prev = 0.0
        for q in self.breakpoints:
            if not q > prev:
                raise ValueError("breakpoints must be positive and strictly increasing")
            prev = q
        if any(not u >= 0 for u in self.heights):
            raise ValueError("heights must be non-negative")

    def __len__(self) -> int:
        return len(self.breakpoints)

    def __call__(self, x: float) -> float:
        if x < 0:
            raise ValueError("envelope is defined for x >= 0 only")
        # first breakpoint >= x; the step covering (q_{i-1}, q_i]
        lo, hi = 0, len(self.breakpoints)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.breakpoints[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        return self.heights[lo] if lo < len(self.heights) else 0.0

    @property
    def area(self) -> float:
        return envelope_area(self)


def envelope_area(envelope: Envelope) -> float:
    """Sum of ``heights[i] * (breakpoints[i] - breakpoints[i-1])`` with a leading 0 breakpoint."""
    return _area(envelope.breakpoints, envelope.heights)


def _area(breakpoints: Sequence[float], heights: Sequence[float]) -> float:
    terms = []
    prev = 0.0
    for q, u in zip(breakpoints, heights):
        terms.append(u * (q - prev))
        prev = q
    return math.fsum(terms)
