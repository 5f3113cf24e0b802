"""Stable base locus annotations and the finite-generation verdict.

Which zero-pairing components lie in the stable base locus depends on data
the intersection matrix does not see (class-group torsion, for one), so it
is supplied by the caller.  This module only checks that an annotation is
compatible with the necessary conditions and normalises it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable

from .dualgraph import DualGraph, QDivisor, is_antinef, pairings
from .errors import (
    RULE_ADJACENCY,
    RULE_NEGATIVE_CURVE,
    InputError,
    SBLValidationError,
)


class SBLProvider(str, enum.Enum):
    EXPLICIT = "explicit"
    RATIONAL_SINGULARITY = "rational"
    ORACLE = "oracle"


@dataclass(frozen=True)
class SBLSet:
    components: frozenset[frozenset[int]]
    provider: SBLProvider

    @property
    def curves(self) -> frozenset[int]:
        return frozenset().union(*self.components)

    def __contains__(self, curve_id: object) -> bool:
        return curve_id in self.curves

    def __bool__(self) -> bool:
        return bool(self.components)

    def sorted_components(self) -> list[list[int]]:
        return sorted(sorted(c) for c in self.components)


def _require_antinef(g: DualGraph, delta: QDivisor) -> None:
    if not is_antinef(g, delta):
        raise InputError("Delta is not antinef; run the Zariski decomposition first")


def zero_locus_components(g: DualGraph, delta: QDivisor) -> list[frozenset[int]]:
    """Connected components of the subgraph on curves E with (Delta . E) = 0."""
    _require_antinef(g, delta)
    zero = [c for c, v in pairings(g, delta).items() if v == 0]
    return g.components(zero)


def validate_sbl(g: DualGraph, delta: QDivisor, curves: Iterable[int]) -> frozenset[frozenset[int]]:
    """Check a proposed set of sBL curves and return it grouped into components.

    The set must avoid negative-pairing curves and must be a union of whole
    components of the zero locus: a zero-pairing curve outside the set that
    meets it would contradict the adjacency constraint.
    """
    _require_antinef(g, delta)
    curves = set(curves)
    for c in sorted(curves):
        g.index(c)
    pair = pairings(g, delta)
    negative = sorted(c for c in curves if pair[c] < 0)
    if negative:
        raise SBLValidationError(
            f"curves {negative} have negative pairing with Delta and cannot lie in the stable base locus",
            rule=RULE_NEGATIVE_CURVE,
        )
    out = set()
    for comp in zero_locus_components(g, delta):
        inside = comp & curves
        if inside and inside != comp:
            missing = sorted(comp - curves)
            raise SBLValidationError(
                f"zero-pairing curves {missing} meet the stable base locus but are excluded from it",
                rule=RULE_ADJACENCY,
            )
        if inside:
            out.add(comp)
    return frozenset(out)


def resolve_sbl(
    g: DualGraph,
    delta: QDivisor,
    provider: SBLProvider | str,
    components: Iterable[Iterable[int]] = (),
    membership: Callable[[frozenset[int]], bool] | None = None,
) -> SBLSet:
    """Produce a validated SBLSet from one of the three sources.

    ``explicit`` takes ``components`` (any grouping; the union is what is
    checked), ``rational`` always gives the empty set, ``oracle`` asks
    ``membership`` once per zero-locus component.
    """
    provider = SBLProvider(provider)
    _require_antinef(g, delta)
    if provider is SBLProvider.RATIONAL_SINGULARITY:
        return SBLSet(frozenset(), provider)
    if provider is SBLProvider.EXPLICIT:
        curves = set()
        for comp in components:
            curves.update(comp)
        return SBLSet(validate_sbl(g, delta, curves), provider)
    if membership is None:
        raise InputError("the oracle provider needs a membership predicate")
    chosen = frozenset(c for c in zero_locus_components(g, delta) if membership(c))
    return SBLSet(chosen, provider)


def is_finitely_generated(sbl: SBLSet) -> bool:
    """The Rees algebra is finitely generated iff the stable base locus is empty."""
    return not sbl.components
