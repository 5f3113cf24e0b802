"""Minimal primes of the fiber cone and the analytic spread trichotomy.

Each exceptional curve E carries a homogeneous prime P_E of the Rees
algebra.  Its dimension is read off from the sign of (Delta . E) and from
sBL membership:

* (Delta . E) < 0             -> dim 2, one distinct prime per curve
* (Delta . E) = 0, E not sBL  -> dim 1, shared by the whole zero component
* E in sBL                    -> dim 0, the irrelevant prime m_R + R[I]_+
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .basloc import SBLSet, zero_locus_components
from .dualgraph import DualGraph, QDivisor, pairings
from .errors import RULE_NEGATIVE_CURVE, RULE_WHOLE_FIBER, ConsistencyError, InputError


class PrimeIdentity(str, enum.Enum):
    IRRELEVANT = "irrelevant"
    DISTINCT = "distinct"
    SHARED = "shared"


@dataclass(frozen=True)
class PrimeClass:
    curve: int
    dim: int
    identity: PrimeIdentity
    component: int | None = None  # index into zero_locus_components when SHARED


class RadicalKind(str, enum.Enum):
    IRRELEVANT = "irrelevant"          # spread 0
    SINGLE_DIM_ONE = "single_dim_one"  # spread 1
    DIM_TWO_PRIMES = "dim_two_primes"  # spread 2


@dataclass(frozen=True)
class Radical:
    kind: RadicalKind
    curves: tuple[int, ...]  # curves whose primes make up the radical

    def describe(self) -> str:
        if self.kind is RadicalKind.IRRELEVANT:
            return "m_R + R[I]_+"
        if self.kind is RadicalKind.SINGLE_DIM_ONE:
            return " = ".join(f"P_E{c}" for c in self.curves) + " (dim 1)"
        return " & ".join(f"P_E{c}" for c in self.curves)


@dataclass(frozen=True)
class FiberConeReport:
    spread: int
    primes: tuple[PrimeClass, ...]
    radical: Radical

    @property
    def minimal_primes(self) -> tuple[PrimeClass, ...]:
        wanted = set(self.radical.curves)
        return tuple(p for p in self.primes if p.curve in wanted)


def _classify_all(g: DualGraph, delta: QDivisor, sbl: SBLSet) -> list[PrimeClass]:
    pair = pairings(g, delta)
    comps = zero_locus_components(g, delta)
    where = {c: k for k, comp in enumerate(comps) for c in comp}
    in_sbl = sbl.curves
    out = []
    for c in g.curve_ids:
        if c in in_sbl:
            if pair[c] != 0:
                raise ConsistencyError(f"curve {c} is in sBL but pairs negatively", rule=RULE_NEGATIVE_CURVE)
            out.append(PrimeClass(c, 0, PrimeIdentity.IRRELEVANT))
        elif pair[c] < 0:
            out.append(PrimeClass(c, 2, PrimeIdentity.DISTINCT))
        else:
            out.append(PrimeClass(c, 1, PrimeIdentity.SHARED, where[c]))
    return out


def prime_class(g: DualGraph, delta: QDivisor, sbl: SBLSet, curve_id: int) -> PrimeClass:
    g.index(curve_id)
    return next(p for p in _classify_all(g, delta, sbl) if p.curve == curve_id)


def _spread(g: DualGraph, primes: list[PrimeClass], sbl: SBLSet) -> int:
    if any(p.dim == 2 for p in primes):
        return 2
    if not sbl:
        return 1
    if sbl.curves != set(g.curve_ids):
        raise ConsistencyError(
            "every curve pairs to zero with Delta and sBL is nonempty, so the whole"
            f" exceptional fiber must lie in sBL; curves {sorted(set(g.curve_ids) - sbl.curves)}"
            " are missing",
            rule=RULE_WHOLE_FIBER,
        )
    return 0


def analytic_spread(g: DualGraph, delta: QDivisor, sbl: SBLSet) -> int:
    return _spread(g, _classify_all(g, delta, sbl), sbl)


def radical_decomposition(g: DualGraph, delta: QDivisor, sbl: SBLSet) -> FiberConeReport:
    primes = _classify_all(g, delta, sbl)
    spread = _spread(g, primes, sbl)
    if spread == 2:
        radical = Radical(RadicalKind.DIM_TWO_PRIMES, tuple(p.curve for p in primes if p.dim == 2))
    elif spread == 1:
        comps = {p.component for p in primes}
        if len(comps) != 1:
            # unreachable on a connected graph
            raise InputError("spread 1 requires a single zero-pairing component")
        radical = Radical(RadicalKind.SINGLE_DIM_ONE, tuple(p.curve for p in primes))
    else:
        radical = Radical(RadicalKind.IRRELEVANT, ())
    return FiberConeReport(spread, tuple(primes), radical)
