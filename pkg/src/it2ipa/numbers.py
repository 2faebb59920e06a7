"""Interval type-2 trapezoidal fuzzy numbers and their arithmetic.

A value is a pair of trapezoids (upper and lower membership functions), each
described by four endpoints and two heights. Arithmetic is component-wise on
the endpoints (division cross-reverses the divisor's endpoints) and heights
combine by minimum. Subtraction and division can yield endpoint tuples that
are no longer non-decreasing; those raw tuples are returned unchanged with an
``OrderingViolatedWarning`` instead of being sorted, because the downstream
closed-form defuzzification and ranking formulas are defined on the raw
tuples.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass


class NegativeSupportError(ValueError):
    """Multiplication requires both operands to have non-negative support."""


class DivisorSpansZeroError(ValueError):
    """Division requires the divisor's support to be strictly positive."""


class InvalidDivisorError(ValueError):
    """Scalar division requires a positive integer divisor."""


class OrderingViolatedWarning(UserWarning):
    """Non-fatal signal: an operation produced non-monotone endpoints."""


# Endpoint comparisons allow this much slack so that floating-point dust
# (e.g. 0.7 - 0.3 < 0.4 by one ulp) is not flagged as a genuine violation.
_ORDER_SLACK = 1e-12


@dataclass(frozen=True)
class Trapezoid:
    """One membership trapezoid: endpoints a1..a4 with heights h1, h2."""

    a1: float
    a2: float
    a3: float
    a4: float
    h1: float = 1.0
    h2: float = 1.0

    def __post_init__(self):
        if not (0.0 < self.h1 <= 1.0 and 0.0 < self.h2 <= 1.0):
            raise ValueError(f"heights must lie in (0, 1], got ({self.h1}, {self.h2})")

    @property
    def endpoints(self) -> tuple[float, float, float, float]:
        return (self.a1, self.a2, self.a3, self.a4)

    @property
    def heights(self) -> tuple[float, float]:
        return (self.h1, self.h2)

    @property
    def is_ordered(self) -> bool:
        pairs = ((self.a1, self.a2), (self.a2, self.a3), (self.a3, self.a4))
        return all(right >= left - _ORDER_SLACK for left, right in pairs)


_NUM = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_TRAP = rf"\(\s*({_NUM})\s*,\s*({_NUM})\s*,\s*({_NUM})\s*,\s*({_NUM})\s*;\s*({_NUM})\s*,\s*({_NUM})\s*\)"
_CANONICAL = re.compile(rf"^\s*\(\s*{_TRAP}\s*,\s*{_TRAP}\s*\)\s*$")


def _fmt(value: float, decimals: int | None) -> str:
    if decimals is None:
        return repr(float(value))
    text = f"{value:.{decimals}f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-", "-0") else text


@dataclass(frozen=True)
class IT2TrapFN:
    """An interval type-2 trapezoidal fuzzy number (upper + lower trapezoid)."""

    upper: Trapezoid
    lower: Trapezoid

    @classmethod
    def crisp(cls, value: float) -> "IT2TrapFN":
        t = Trapezoid(value, value, value, value, 1.0, 1.0)
        return cls(t, t)

    @classmethod
    def from_text(cls, text: str) -> "IT2TrapFN":
        """Parse the canonical form ``((a1,a2,a3,a4;h1,h2),(b1,b2,b3,b4;g1,g2))``."""
        match = _CANONICAL.match(text)
        if match is None:
            raise ValueError(f"not a canonical interval type-2 trapezoid: {text!r}")
        nums = [float(g) for g in match.groups()]
        return cls(Trapezoid(*nums[:6]), Trapezoid(*nums[6:]))

    def to_text(self, decimals: int | None = None) -> str:
        """Render the canonical textual form; ``decimals`` enables display rounding."""
        parts = []
        for t in (self.upper, self.lower):
            ends = ",".join(_fmt(v, decimals) for v in t.endpoints)
            hs = ",".join(_fmt(v, decimals) for v in t.heights)
            parts.append(f"({ends};{hs})")
        return f"({parts[0]},{parts[1]})"

    @property
    def is_ordered(self) -> bool:
        return self.upper.is_ordered and self.lower.is_ordered

    def violations(self) -> list[str]:
        """Structural invariant violations (empty list when well-formed)."""
        problems = []
        if not self.upper.is_ordered:
            problems.append(f"upper endpoints not non-decreasing: {self.upper.endpoints}")
        if not self.lower.is_ordered:
            problems.append(f"lower endpoints not non-decreasing: {self.lower.endpoints}")
        if (self.lower.a1 < self.upper.a1 - _ORDER_SLACK
                or self.lower.a4 > self.upper.a4 + _ORDER_SLACK):
            problems.append("lower support not contained in upper support")
        if self.lower.h1 > self.upper.h1 or self.lower.h2 > self.upper.h2:
            problems.append("lower heights exceed upper heights")
        return problems

    def __add__(self, other: "IT2TrapFN") -> "IT2TrapFN":
        return add(self, other)

    def __sub__(self, other: "IT2TrapFN") -> "IT2TrapFN":
        return sub(self, other)

    def __mul__(self, other: "IT2TrapFN") -> "IT2TrapFN":
        return mul(self, other)

    def __truediv__(self, other):
        if isinstance(other, IT2TrapFN):
            return div(self, other)
        if isinstance(other, int) and not isinstance(other, bool):
            return scalar_div(self, other)
        return NotImplemented


def it2(upper: tuple, lower: tuple) -> IT2TrapFN:
    """Compact constructor from two 6-tuples ``(a1, a2, a3, a4, h1, h2)``."""
    return IT2TrapFN(Trapezoid(*upper), Trapezoid(*lower))


def _min_heights(x: Trapezoid, y: Trapezoid) -> tuple[float, float]:
    return (min(x.h1, y.h1), min(x.h2, y.h2))


def _warn_if_unordered(result: IT2TrapFN, op: str) -> IT2TrapFN:
    if not result.is_ordered:
        warnings.warn(
            f"{op} produced non-monotone endpoints; raw tuple returned",
            OrderingViolatedWarning,
            stacklevel=3,
        )
    return result


def add(a: IT2TrapFN, b: IT2TrapFN) -> IT2TrapFN:
    """Component-wise endpoint sums; heights combine by minimum."""
    def trap(x: Trapezoid, y: Trapezoid) -> Trapezoid:
        return Trapezoid(x.a1 + y.a1, x.a2 + y.a2, x.a3 + y.a3, x.a4 + y.a4,
                         *_min_heights(x, y))

    return IT2TrapFN(trap(a.upper, b.upper), trap(a.lower, b.lower))


def sub(a: IT2TrapFN, b: IT2TrapFN) -> IT2TrapFN:
    """Component-wise endpoint differences in like index order.

    The result can be non-monotone; it is returned raw with an
    ``OrderingViolatedWarning`` rather than re-sorted.
    """
    def trap(x: Trapezoid, y: Trapezoid) -> Trapezoid:
        return Trapezoid(x.a1 - y.a1, x.a2 - y.a2, x.a3 - y.a3, x.a4 - y.a4,
                         *_min_heights(x, y))

    return _warn_if_unordered(IT2TrapFN(trap(a.upper, b.upper), trap(a.lower, b.lower)), "sub")


def mul(a: IT2TrapFN, b: IT2TrapFN) -> IT2TrapFN:
    """Component-wise endpoint products (approximate IT2 product).

    Only valid for non-negative supports, where the component-wise rule is
    monotone.
    """
    if a.upper.a1 < 0 or b.upper.a1 < 0:
        raise NegativeSupportError(
            f"multiplication needs non-negative supports, got lower bounds "
            f"{a.upper.a1} and {b.upper.a1}"
        )

    def trap(x: Trapezoid, y: Trapezoid) -> Trapezoid:
        return Trapezoid(x.a1 * y.a1, x.a2 * y.a2, x.a3 * y.a3, x.a4 * y.a4,
                         *_min_heights(x, y))

    return IT2TrapFN(trap(a.upper, b.upper), trap(a.lower, b.lower))


def div(a: IT2TrapFN, b: IT2TrapFN) -> IT2TrapFN:
    """Cross-reversed component-wise quotients (approximate IT2 quotient).

    Endpoint k of the result divides a's endpoint k by b's endpoint 5-k
    within each trapezoid. The divisor's support must be strictly positive.
    """
    if b.upper.a1 <= 0:
        raise DivisorSpansZeroError(
            f"divisor support must be strictly positive, got lower bound {b.upper.a1}"
        )

    def trap(x: Trapezoid, y: Trapezoid) -> Trapezoid:
        return Trapezoid(x.a1 / y.a4, x.a2 / y.a3, x.a3 / y.a2, x.a4 / y.a1,
                         *_min_heights(x, y))

    return _warn_if_unordered(IT2TrapFN(trap(a.upper, b.upper), trap(a.lower, b.lower)), "div")


def scalar_div(a: IT2TrapFN, m: int) -> IT2TrapFN:
    """Divide every endpoint by a positive integer; heights unchanged."""
    if m < 1:
        raise InvalidDivisorError(f"divisor must be a positive integer, got {m}")

    def trap(t: Trapezoid) -> Trapezoid:
        return Trapezoid(t.a1 / m, t.a2 / m, t.a3 / m, t.a4 / m, t.h1, t.h2)

    return IT2TrapFN(trap(a.upper), trap(a.lower))


def one_minus(a: IT2TrapFN) -> IT2TrapFN:
    """Crisp one minus fuzzy: endpoint k becomes 1 - endpoint 5-k; heights kept.

    Applying it twice returns the input (involution).
    """
    def trap(t: Trapezoid) -> Trapezoid:
        return Trapezoid(1.0 - t.a4, 1.0 - t.a3, 1.0 - t.a2, 1.0 - t.a1, t.h1, t.h2)

    return IT2TrapFN(trap(a.upper), trap(a.lower))
