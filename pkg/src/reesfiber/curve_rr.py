"""Degree, Euler characteristic and the H^1 vanishing test on an exceptional curve."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .dualgraph import DualGraph, QDivisor, intersect
from .errors import InputError


@dataclass(frozen=True)
class CurveDivisor:
    """Divisor sum(mult_i * p_i) on a curve; each point carries its residue degree over k."""

    points: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        pts = tuple((int(kd), int(m)) for kd, m in self.points)
        if any(kd < 1 for kd, _ in pts):
            raise InputError("residue degree of a closed point must be >= 1")
        object.__setattr__(self, "points", pts)

    def __add__(self, other: "CurveDivisor") -> "CurveDivisor":
        return CurveDivisor(self.points + other.points)


def curve_degree(d: CurveDivisor | Iterable[tuple[int, int]]) -> int:
    if not isinstance(d, CurveDivisor):
        d = CurveDivisor(tuple(d))
    return sum(kd * m for kd, m in d.points)


def euler_char(deg: int, p_a: int) -> int:
    """Riemann-Roch: chi(O_E(D)) = deg D + 1 - p_a(E)."""
    return deg + 1 - p_a


def h1_vanishes(deg: int, p_a: int) -> bool:
    """Sufficient test for H^1(E, O_E(D)) = 0: deg D > 2 p_a - 2.

    A False result only means the test is inconclusive.
    """
    return deg > 2 * p_a - 2


def restriction_degree(g: DualGraph, d: QDivisor, curve_id: int) -> Fraction:
    """Degree of O_X(D) restricted to E, which is the pairing (D . E)."""
    return intersect(g, d, curve_id)
