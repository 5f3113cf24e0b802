"""Monomial-ideal oracle on k[[x, y]]."""

from ._backend import BACKEND
from .monomial import (
    DEFAULT_WINDOW,
    FiltrationFamily,
    FiltrationSpecM,
    GammaBruteforce,
    IntroExample,
    MonomialValuation,
    Staircase,
    contains,
    filtration_ideal,
    filtration_ideals,
    gamma_bruteforce,
    ideal_sum,
    integral_closure,
    intersection,
    min_generators,
    new_generators,
    order,
    product,
    valuation_ideal,
    witness,
)

__all__ = [
    "BACKEND",
    "DEFAULT_WINDOW",
    "FiltrationFamily",
    "FiltrationSpecM",
    "GammaBruteforce",
    "IntroExample",
    "MonomialValuation",
    "Staircase",
    "contains",
    "filtration_ideal",
    "filtration_ideals",
    "gamma_bruteforce",
    "ideal_sum",
    "integral_closure",
    "intersection",
    "min_generators",
    "new_generators",
    "order",
    "product",
    "valuation_ideal",
    "witness",
]
