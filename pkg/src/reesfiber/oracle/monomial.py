"""Brute-force ground truth on R = k[[x, y]] with monomial valuations.

Monomial ideals are stored as staircases (minimal generators, sorted by
x-exponent).  A filtration is I_n = intersection over k of the valuation
ideals I(v_k)_{ceil(n a_k)}; everything reduces to exact lattice work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Protocol

from ..errors import InputError
from ._backend import kernels

DEFAULT_WINDOW = 50

Point = tuple[int, int]


@dataclass(frozen=True)
class MonomialValuation:
    """v(x^i y^j) = wx*i + wy*j with coprime positive weights."""

    wx: int
    wy: int

    def __post_init__(self):
        if self.wx < 1 or self.wy < 1:
            raise InputError(f"monomial valuation weights must be positive, got ({self.wx}, {self.wy})")
        if math.gcd(self.wx, self.wy) != 1:
            raise InputError(f"monomial valuation weights must be coprime, got ({self.wx}, {self.wy})")

    def __call__(self, i: int, j: int) -> int:
        return self.wx * i + self.wy * j


@dataclass(frozen=True)
class FiltrationSpecM:
    terms: tuple[tuple[MonomialValuation, Fraction], ...]

    def __post_init__(self):
        terms = tuple((v, Fraction(a)) for v, a in self.terms)
        if not terms:
            raise InputError("a filtration spec needs at least one valuation")
        if any(a <= 0 for _, a in terms):
            raise InputError("filtration weights must be positive")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, *terms: tuple[tuple[int, int], Fraction | int | str]) -> "FiltrationSpecM":
        """``FiltrationSpecM.of(((1, 2), 1), ((2, 1), "1/2"))``"""
        return cls(tuple((MonomialValuation(*w), Fraction(a)) for w, a in terms))


@dataclass(frozen=True)
class Staircase:
    gens: tuple[Point, ...]

    def __post_init__(self):
        gens = tuple((int(i), int(j)) for i, j in self.gens)
        if any(i < 0 or j < 0 for i, j in gens):
            raise InputError("staircase exponents must be nonnegative")
        for (i1, j1), (i2, j2) in zip(gens, gens[1:]):
            if not (i1 < i2 and j1 > j2):
                raise InputError(f"{gens} is not a sorted antichain; use Staircase.of")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def of(cls, points: Iterable[Point]) -> "Staircase":
        """Staircase of the ideal generated by the given monomials."""
        return cls(tuple(kernels.minimize(list(points))))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0, 0),)

    def __str__(self) -> str:
        return "(" + ", ".join(_monomial(i, j) for i, j in self.gens) + ")"


def _monomial(i: int, j: int) -> str:
    if i == j == 0:
        return "1"
    parts = []
    for var, e in (("x", i), ("y", j)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


def valuation_ideal(v: MonomialValuation, c: int) -> Staircase:
    return Staircase(tuple(kernels.valuation_ideal(v.wx, v.wy, c)))


def intersection(a: Staircase, b: Staircase) -> Staircase:
    return Staircase(tuple(kernels.intersection(list(a.gens), list(b.gens))))


def ideal_sum(a: Staircase, b: Staircase) -> Staircase:
    return Staircase.of(a.gens + b.gens)


def product(a: Staircase, b: Staircase) -> Staircase:
    return Staircase(tuple(kernels.product(list(a.gens), list(b.gens))))


def contains(a: Staircase, b: Staircase) -> bool:
    """True iff the ideal ``b`` is contained in the ideal ``a``."""
    return kernels.contains(list(a.gens), list(b.gens))


def integral_closure(a: Staircase) -> Staircase:
    return Staircase(tuple(kernels.closure(list(a.gens))))


def order(a: Staircase, v: MonomialValuation) -> int:
    """v(I) = min of v over the ideal, attained at a generator."""
    if not a.gens:
        raise InputError("the zero ideal has no finite order")
    return kernels.order(list(a.gens), v.wx, v.wy)


def filtration_ideal(spec: FiltrationSpecM, n: int) -> Staircase:
    if n < 1:
        raise InputError(f"filtration degree must be >= 1, got {n}")
    out = None
    for v, a in spec.terms:
        cur = valuation_ideal(v, math.ceil(n * a))
        out = cur if out is None else intersection(out, cur)
    return out


def filtration_ideals(spec: FiltrationSpecM, window: int) -> list[Staircase]:
    """[I_1, ..., I_window]."""
    return [filtration_ideal(spec, n) for n in range(1, window + 1)]


def min_generators(spec: FiltrationSpecM, n: int) -> int:
    return len(filtration_ideal(spec, n))


@dataclass(frozen=True)
class GammaBruteforce:
    value: Fraction
    attained_at: frozenset[int]
    window: int
    orders: tuple[int, ...] = ()  # v(I_n) for n = 1..window


def gamma_bruteforce(
    spec: FiltrationSpecM, w: MonomialValuation, window: int = DEFAULT_WINDOW
) -> GammaBruteforce:
    """min over n <= window of v(I_n)/n, with the set of n realising it.

    This is the infimum over the window only; it certifies the true gamma
    when combined with attainment (the ratio is then constant on multiples).
    """
    if window < 1:
        raise InputError("window must be >= 1")
    orders = tuple(order(filtration_ideal(spec, n), w) for n in range(1, window + 1))
    ratios = [Fraction(o, n) for n, o in enumerate(orders, start=1)]
    best = min(ratios)
    return GammaBruteforce(best, frozenset(n for n, q in enumerate(ratios, start=1) if q == best), window, orders)


class DegreewiseIdealFamily(Protocol):
    def __call__(self, n: int) -> Staircase: ...


class IntroExample:
    """J_n = (x, y^n): a graded family whose Rees algebra is not Noetherian."""

    name = "intro"

    def __call__(self, n: int) -> Staircase:
        if n < 1:
            raise InputError("degree must be >= 1")
        return Staircase(((0, n), (1, 0)))


@dataclass(frozen=True)
class FiltrationFamily:
    """Adapts a FiltrationSpecM to the degree-wise family interface."""

    spec: FiltrationSpecM

    def __call__(self, n: int) -> Staircase:
        return filtration_ideal(self.spec, n)


def new_generators(family: DegreewiseIdealFamily | Callable[[int], Staircase], n: int) -> tuple[Point, ...]:
    """Generators of J_n not in sum_{0<k<n} J_k J_{n-k}: fresh Rees-algebra generators in degree n."""
    if n < 1:
        raise InputError("degree must be >= 1")
    lower = [family(k) for k in range(1, n)]
    total: tuple[Point, ...] = ()
    for k in range(1, n // 2 + 1):
        total += product(lower[k - 1], lower[n - k - 1]).gens
    old = Staircase.of(total)
    return tuple(g for g in family(n).gens if not contains(old, Staircase((g,))))


def witness(family: DegreewiseIdealFamily | Callable[[int], Staircase], window: int) -> dict[int, tuple[Point, ...]]:
    """new_generators for every degree 1..window."""
    return {n: new_generators(family, n) for n in range(1, window + 1)}

