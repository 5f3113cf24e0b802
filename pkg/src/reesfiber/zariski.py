"""Local Zariski decomposition Delta = D + B of an effective Q-divisor."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .dualgraph import DualGraph, QDivisor, intersect, is_antinef, pairings
from .errors import InputError
from .linalg import solve


@dataclass(frozen=True)
class ZariskiDecomposition:
    D: QDivisor
    Delta: QDivisor
    B: QDivisor
    support_trace: tuple[frozenset[int], ...] = ()

    @property
    def iterations(self) -> int:
        return len(self.support_trace)


def solve_contact(g: DualGraph, d: QDivisor, support: Iterable[int]) -> dict[int, Fraction]:
    """Coefficients b on ``support`` making D + sum(b_E E) pair to zero with every E in it.

    The restriction of a negative definite matrix is negative definite, so
    the system always has a unique solution on a valid graph.
    """
    wanted = set(support)
    support = [c for c in g.curve_ids if c in wanted]
    if not support:
        return {}
    rows = [[g.pairing(e, f) for e in support] for f in support]
    rhs = [-intersect(g, d, f) for f in support]
    try:
        b = solve(rows, rhs)
    except ZeroDivisionError:
        raise RuntimeError(f"restricted intersection matrix on {support} is singular") from None
    return dict(zip(support, b))


def zariski_decompose(g: DualGraph, d: QDivisor) -> ZariskiDecomposition:
    """Grow the support of B by every curve with positive pairing until -Delta is nef."""
    if not g.report.valid:
        raise InputError("invalid dual graph: " + "; ".join(g.report.problems))
    for k in d.exc:
        g.index(k)
    for k in d.ext:
        g.external(k)

    support: frozenset[int] = frozenset()
    trace: list[frozenset[int]] = []
    b: dict[int, Fraction] = {}
    delta = d
    while True:
        positive = {c for c, v in pairings(g, delta).items() if v > 0}
        if not positive:
            break
        support = support | positive
        trace.append(support)
        if len(trace) > g.r:
            raise RuntimeError("Zariski iteration exceeded the number of curves")
        new_b = solve_contact(g, d, support)
        if any(v < 0 for v in new_b.values()) or any(new_b[c] < b.get(c, 0) for c in b):
            raise RuntimeError("Zariski iteration produced a non-monotone correction")
        b = new_b
        delta = d + QDivisor(b)

    assert is_antinef(g, delta)
    return ZariskiDecomposition(d, delta, QDivisor(b), tuple(trace))
