"""Crisp-value extraction for interval type-2 trapezoidal numbers."""

from __future__ import annotations

from .numbers import IT2TrapFN, Trapezoid


def _quarter_sum(t: Trapezoid) -> float:
    # Each trapezoid uses its own heights to weight the two middle endpoints.
    low = t.a1
    return ((t.a4 - low) + (t.h1 * t.a2 - low) + (t.h2 * t.a3 - low)) / 4.0 + low


def dtrat(a: IT2TrapFN) -> float:
    """Trapezoidal average defuzzification (DTraT).

    Averages a height-weighted quarter-sum over the upper and lower
    trapezoids. A crisp number with unit heights defuzzifies to itself.
    """
    return 0.5 * (_quarter_sum(a.upper) + _quarter_sum(a.lower))
