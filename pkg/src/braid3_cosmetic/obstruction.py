"""
Deciding whether the available invariants rule out purely cosmetic
surgeries.

The ladder:

1. a2 != 0 rules out purely cosmetic surgeries (Boyer-Lines).
2. Otherwise only {+-2} (genus exactly 2) and {+-1/q} pairs with
   q <= (th + 2g) / (2g(g - 1)) can survive (Hanselman).  With g >= 3 and
   that ratio below 1 nothing survives.
3. Otherwise report the surviving candidates, or give up when the genus
   may be 1 or less.

Every quantity is an exact Fraction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd
from typing import List, Optional, Tuple

LITERATURE_NOTES = (
    "composite knots admit no purely cosmetic surgeries (Tao); not checked here",
    "prime knots with at most 11 crossings satisfy the conjecture, except possibly 10_118 (Ito); not checked here",
)


class Verdict(str, enum.Enum):
    NO_PCS = "NO_PCS"
    RESIDUAL = "RESIDUAL"
    INCONCLUSIVE = "INCONCLUSIVE"


class Reason(str, enum.Enum):
    BOYER_LINES = "BOYER_LINES"
    HANSELMAN = "HANSELMAN"


class GenusTooSmallError(ValueError):
    pass


class InconsistentInputsError(ValueError):
    pass


@dataclass(frozen=True)
class GenusBounds:
    lower: int
    upper: Fraction

    def __post_init__(self):
        if self.lower < 0:
            raise InconsistentInputsError("genus lower bound is negative")
        if self.lower > self.upper:
            raise InconsistentInputsError(
                f"genus lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def certified(self) -> bool:
        return self.lower == self.upper

    def may_equal(self, g: int) -> bool:
        return self.lower <= g <= self.upper


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int = 1

    def __post_init__(self):
        if self.q <= 0:
            raise ValueError("slope denominator must be positive")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not in lowest terms")

    def __str__(self):
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


SlopePair = Tuple[Slope, Slope]


def thickness_bound_from_genus(g) -> Fraction:
    """(5/3)(g + 1): the thickness bound for a 3-braid knot of genus g."""
    g = Fraction(g)
    if g < 0:
        raise ValueError("genus must be nonnegative")
    return Fraction(5, 3) * (g + 1)


def hanselman_ratio(th, g: int) -> Fraction:
    """(th + 2g) / (2g(g - 1)), defined for g >= 2."""
    if g < 2:
        raise GenusTooSmallError(f"ratio needs genus at least 2, got {g}")
    th = Fraction(th)
    if th < 0:
        raise ValueError("thickness must be nonnegative")
    return (th + 2 * g) / (2 * g * (g - 1))


def hanselman_qmax(th, g: int) -> int:
    """Largest q for which {+-1/q} can still be purely cosmetic; 0 means none."""
    return floor(hanselman_ratio(th, g))


@dataclass(frozen=True)
class ObstructionReport:
    verdict: Verdict
    reason: Optional[Reason]
    candidates: Tuple[SlopePair, ...]
    a2: int
    genus: GenusBounds
    thickness_upper: Fraction
    ratio: Optional[Fraction]
    q_max: Optional[int]
    notes: Tuple[str, ...] = field(default=LITERATURE_NOTES)

    def __post_init__(self):
        if self.verdict is Verdict.NO_PCS and self.reason is None:
            raise ValueError("NO_PCS needs a reason")
        if self.verdict is Verdict.RESIDUAL and not self.candidates:
            raise ValueError("RESIDUAL needs candidate slopes")


def verdict(a2: int, gb: GenusBounds, th_upper, trivial_knot: Optional[bool] = None) -> ObstructionReport:
    th_upper = Fraction(th_upper)
    if trivial_knot is None:
        trivial_knot = gb.upper == 0
    notes = list(LITERATURE_NOTES)
    ratio = q_max = None
    if gb.lower >= 2:
        ratio = hanselman_ratio(th_upper, gb.lower)
        q_max = floor(ratio)
    common = dict(a2=a2, genus=gb, thickness_upper=th_upper, ratio=ratio, q_max=q_max)

    if a2 != 0:
        return ObstructionReport(Verdict.NO_PCS, Reason.BOYER_LINES, (), notes=tuple(notes), **common)

    if not gb.certified:
        notes.append("genus not certified; the inequality uses the lower bound, which is conservative")

    if gb.lower >= 3 and q_max == 0:
        return ObstructionReport(Verdict.NO_PCS, Reason.HANSELMAN, (), notes=tuple(notes), **common)

    if gb.lower <= 1:
        if trivial_knot:
            notes.insert(0, "trivial knot; the obstructions do not apply")
        else:
            notes.insert(0, "genus may be at most 1, so the +-1/q family is unbounded")
        return ObstructionReport(Verdict.INCONCLUSIVE, None, (), notes=tuple(notes), **common)

    candidates: List[SlopePair] = []
    if gb.may_equal(2):
        candidates.append((Slope(2), Slope(-2)))
    for q in range(1, q_max + 1):
        candidates.append((Slope(1, q), Slope(-1, q)))
    return ObstructionReport(Verdict.RESIDUAL, None, tuple(candidates), notes=tuple(notes), **common)
