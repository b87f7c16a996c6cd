"""Triangular fuzzy numbers, alpha-cuts, defuzzification and goal memberships.

A triangular fuzzy number ``(lower, center, upper)`` has membership 1 at
``center`` and decays linearly to 0 at ``lower`` and ``upper``.  The
*standard ranking function* maps such a number onto the matrix of its cut
endpoints over a fixed set of cut levels; two numbers are compared through
the component-wise order on those matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "TriangularFuzzyNumber",
    "Interval",
    "CutSet",
    "RankingMatrix",
    "alpha_cut",
    "defuzzify",
    "ranking_matrix",
    "standard_order_leq",
    "goal_membership",
    "constraint_membership",
]


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """Fuzzy number ``(lower, center, upper)`` with ``lower <= center <= upper``."""

    lower: float
    center: float
    upper: float

    def __post_init__(self):
        for name in ("lower", "center", "upper"):
            value = float(getattr(self, name))
            if not np.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.lower > self.center:
            raise ValueError(f"lower > center ({self.lower} > {self.center})")
        if self.center > self.upper:
            raise ValueError(f"center > upper ({self.center} > {self.upper})")

    @classmethod
    def crisp(cls, value: float) -> "TriangularFuzzyNumber":
        return cls(value, value, value)

    @property
    def is_crisp(self) -> bool:
        return self.lower == self.center == self.upper

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.lower, self.center, self.upper)

    def spreads(self) -> tuple[float, float, float]:
        """The ``(center, left spread, right spread)`` encoding."""
        return (self.center, self.center - self.lower, self.upper - self.center)

    def __add__(self, other: "TriangularFuzzyNumber") -> "TriangularFuzzyNumber":
        if not isinstance(other, TriangularFuzzyNumber):
            return NotImplemented
        return TriangularFuzzyNumber(
            self.lower + other.lower, self.center + other.center, self.upper + other.upper
        )

    def __mul__(self, scalar: float) -> "TriangularFuzzyNumber":
        scalar = float(scalar)
        if scalar >= 0:
            return TriangularFuzzyNumber(scalar * self.lower, scalar * self.center, scalar * self.upper)
        return TriangularFuzzyNumber(scalar * self.upper, scalar * self.center, scalar * self.lower)

    __rmul__ = __mul__

    def __neg__(self) -> "TriangularFuzzyNumber":
        return TriangularFuzzyNumber(-self.upper, -self.center, -self.lower)

    def __str__(self) -> str:
        return f"({self.lower:g}, {self.center:g}, {self.upper:g})"


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class CutSet:
    """Strictly increasing cut levels in [0, 1] whose last level is 1."""

    levels: tuple[float, ...]

    def __init__(self, levels: Iterable[float]):
        levels = tuple(float(a) for a in levels)
        if not levels:
            raise ValueError("a cut set needs at least one level")
        if any(not 0.0 <= a <= 1.0 for a in levels):
            raise ValueError(f"cut levels must lie in [0, 1], got {levels}")
        if any(a >= b for a, b in zip(levels, levels[1:])):
            raise ValueError(f"cut levels must be strictly increasing, got {levels}")
        if levels[-1] != 1.0:
            raise ValueError(f"the last cut level must be 1, got {levels[-1]}")
        object.__setattr__(self, "levels", levels)

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)


@dataclass(frozen=True, eq=False)
class RankingMatrix:
    """``r x 2`` matrix of cut endpoints; row ``i`` is the cut at ``levels[i]``."""

    entries: np.ndarray
    levels: tuple[float, ...]

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[1] != 2 or entries.shape[0] != len(self.levels):
            raise ValueError(f"expected a {len(self.levels)}x2 matrix, got shape {entries.shape}")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        scale = 1.0 + float(np.max(np.abs(entries), initial=0.0))
        if not self.is_nested(tol=1e-12 * scale):
            raise ValueError(f"cut rows are not nested intervals:\n{entries}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RankingMatrix):
            return NotImplemented
        return self.levels == other.levels and np.array_equal(self.entries, other.entries)

    def __le__(self, other: "RankingMatrix") -> bool:
        if self.levels != other.levels:
            raise ValueError("ranking matrices over different cut sets are not comparable")
        return bool(np.all(self.entries <= other.entries))

    def is_nested(self, tol: float = 0.0) -> bool:
        lo, hi = self.entries[:, 0], self.entries[:, 1]
        return bool(
            np.all(lo <= hi + tol) and np.all(np.diff(lo) >= -tol) and np.all(np.diff(hi) <= tol)
        )

    def to_fuzzy_number(self) -> TriangularFuzzyNumber | None:
        """Rebuild the triangular number when the cut set contains level 0."""
        if self.levels[0] != 0.0:
            return None
        lo0, hi0 = self.entries[0]
        center = self.entries[-1, 0]
        return TriangularFuzzyNumber(min(lo0, center), center, max(hi0, center))


def alpha_cut(x: TriangularFuzzyNumber, alpha: float) -> Interval:
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if alpha == 1.0:
        return Interval(x.center, x.center)
    lo = (x.center - x.lower) * alpha + x.lower
    hi = x.upper - (x.upper - x.center) * alpha
    # guard against rounding past the center for alpha close to 1
    return Interval(min(lo, x.center), max(hi, x.center))


def defuzzify(x: TriangularFuzzyNumber) -> float:
    """Mean of the three parameters."""
    return (x.lower + x.center + x.upper) / 3.0


def ranking_matrix(x: TriangularFuzzyNumber, cuts: CutSet | Sequence[float]) -> RankingMatrix:
    if not isinstance(cuts, CutSet):
        cuts = CutSet(cuts)
    rows = []
    for alpha in cuts.levels:
        cut = alpha_cut(x, alpha)
        rows.append((cut.lo, cut.hi))
    return RankingMatrix(np.array(rows), cuts.levels)


def standard_order_leq(
    a: TriangularFuzzyNumber, b: TriangularFuzzyNumber, cuts: CutSet | Sequence[float]
) -> bool:
    return ranking_matrix(a, cuts) <= ranking_matrix(b, cuts)


def goal_membership(z: float, v0: float, p0: float) -> float:
    """Satisfaction of ``z >~ v0`` with a linear ramp of width ``p0`` below ``v0``."""
    if not p0 > 0:
        raise ValueError(f"tolerance p0 must be positive, got {p0}")
    return float(np.clip(1.0 - (v0 - z) / p0, 0.0, 1.0))


def constraint_membership(z: float, w0: float, q0: float) -> float:
    """Satisfaction of ``z <~ w0`` with a linear ramp of width ``q0`` above ``w0``."""
    if not q0 > 0:
        raise ValueError(f"tolerance q0 must be positive, got {q0}")
    return float(np.clip(1.0 - (z - w0) / q0, 0.0, 1.0))
