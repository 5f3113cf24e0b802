"""Scheme structure of Proj of the Rees algebra, centers of valuations and gamma.

Proj(R[I]) is obtained from X minus the stable base locus by contracting
each zero-pairing component outside sBL to a point.  Curves with negative
pairing survive as the one-dimensional part of the exceptional fiber.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .basloc import SBLSet, is_finitely_generated, zero_locus_components
from .dualgraph import DualGraph, QDivisor, pairings
from .errors import RULE_ADJACENCY, ConsistencyError, InputError
from .fibercone import analytic_spread


class FiberShape(str, enum.Enum):
    EMPTY = "empty"
    FINITE_POINT = "finite_point"
    PURE_DIM_ONE_OPEN = "pure_dim_one_open"


_SHAPE_BY_SPREAD = {0: FiberShape.EMPTY, 1: FiberShape.FINITE_POINT, 2: FiberShape.PURE_DIM_ONE_OPEN}


@dataclass(frozen=True)
class ProjDescription:
    kept: frozenset[int]
    contracted: tuple[frozenset[int], ...]
    removed: tuple[frozenset[int], ...]
    noetherian: bool
    proper: bool
    spread: int
    fiber_shape: FiberShape

    @property
    def contracted_points(self) -> int:
        return len(self.contracted)


def build_proj(g: DualGraph, delta: QDivisor, sbl: SBLSet) -> ProjDescription:
    pair = pairings(g, delta)
    kept = frozenset(c for c, v in pair.items() if v < 0)
    comps = zero_locus_components(g, delta)
    removed = tuple(c for c in comps if c in sbl.components)
    contracted = tuple(c for c in comps if c not in sbl.components)
    if set().union(*removed) != sbl.curves:
        raise ConsistencyError("sBL is not a union of zero-locus components", rule=RULE_ADJACENCY)
    for comp in contracted:
        for bad in removed:
            if any(g.adjacent(a, b) for a in comp for b in bad):
                raise ConsistencyError(
                    f"contracted curves {sorted(comp)} meet sBL curves {sorted(bad)}", rule=RULE_ADJACENCY
                )
    spread = analytic_spread(g, delta, sbl)
    fg = is_finitely_generated(sbl)
    desc = ProjDescription(
        kept=kept,
        contracted=contracted,
        removed=removed,
        noetherian=fg,
        proper=fg,
        spread=spread,
        fiber_shape=_SHAPE_BY_SPREAD[spread],
    )
    parts = [kept, *contracted, *removed]
    assert sum(map(len, parts)) == g.r and frozenset().union(*parts) == set(g.curve_ids)
    return desc


class CenterKind(str, enum.Enum):
    ON_CURVE = "on_curve"
    POINT_ON = "point_on"
    OFF_EXCEPTIONAL = "off_exceptional"


@dataclass(frozen=True)
class CenterSpec:
    """Center of a valuation on X.

    ``ON_CURVE``: the generic point of one exceptional curve.  ``POINT_ON``:
    a closed point lying on one curve, or on the intersection of two
    adjacent curves.  ``OFF_EXCEPTIONAL``: anywhere outside the fiber.
    """

    kind: CenterKind
    curves: tuple[int, ...] = ()

    @classmethod
    def on_curve(cls, curve_id: int) -> "CenterSpec":
        return cls(CenterKind.ON_CURVE, (curve_id,))

    @classmethod
    def point_on(cls, *curve_ids: int) -> "CenterSpec":
        return cls(CenterKind.POINT_ON, tuple(curve_ids))

    @classmethod
    def off_exceptional(cls) -> "CenterSpec":
        return cls(CenterKind.OFF_EXCEPTIONAL)


def _check_center(g: DualGraph, c: CenterSpec) -> None:
    kind = CenterKind(c.kind)
    if kind is CenterKind.OFF_EXCEPTIONAL:
        if c.curves:
            raise InputError("an off-exceptional center lies on no curve")
        return
    for cid in c.curves:
        g.index(cid)
    if kind is CenterKind.ON_CURVE and len(c.curves) != 1:
        raise InputError("an on-curve center names exactly one curve")
    if kind is CenterKind.POINT_ON:
        if len(c.curves) not in (1, 2):
            raise InputError("a closed-point center lies on one or two curves")
        if len(c.curves) == 2 and not g.adjacent(*c.curves):
            raise InputError(f"curves {c.curves[0]} and {c.curves[1]} do not meet")


def has_center(g: DualGraph, delta: QDivisor, sbl: SBLSet, c: CenterSpec) -> bool:
    """Whether a valuation with center ``c`` on X has a center on Proj(R[I])."""
    _check_center(g, c)
    if CenterKind(c.kind) is CenterKind.OFF_EXCEPTIONAL:
        return True
    return not any(cid in sbl for cid in c.curves)


@dataclass(frozen=True)
class GammaResult:
    value: Fraction
    attained: bool


def gamma_exceptional(g: DualGraph, delta: QDivisor, sbl: SBLSet, curve_id: int) -> GammaResult:
    """gamma for the divisorial valuation of an exceptional curve E.

    The infimum of v_E(I_n)/n is the coefficient of E in Delta; it is
    attained at some finite level exactly when E is outside sBL.
    """
    g.index(curve_id)
    return GammaResult(delta.coefficient(curve_id), curve_id not in sbl)
