"""Rees algebras of Q-divisorial filtrations on two-dimensional normal local rings.

Given the dual graph of a resolution and an effective Q-divisor, compute the
local Zariski decomposition, classify the fiber cone and analytic spread,
describe Proj of the Rees algebra, and decide valuation-center questions.
The ``oracle`` subpackage brute-forces monomial filtrations on k[[x, y]].
"""

from .basloc import SBLProvider, SBLSet, is_finitely_generated, resolve_sbl, validate_sbl, zero_locus_components
from .curve_rr import CurveDivisor, curve_degree, euler_char, h1_vanishes, restriction_degree
from .dualgraph import (
    DualGraph,
    ExceptionalCurve,
    ExternalDivisor,
    QDivisor,
    ValidationReport,
    intersect,
    is_antinef,
    round_up,
    validate_graph,
)
from .errors import ConsistencyError, InputError, ReesfiberError, SBLValidationError
from .fibercone import FiberConeReport, PrimeClass, PrimeIdentity, analytic_spread, prime_class, radical_decomposition
from .projmodel import (
    CenterKind,
    CenterSpec,
    FiberShape,
    GammaResult,
    ProjDescription,
    build_proj,
    gamma_exceptional,
    has_center,
)
from .zariski import ZariskiDecomposition, solve_contact, zariski_decompose

__version__ = "0.1.0"

__all__ = [
    "CenterKind",
    "CenterSpec",
    "ConsistencyError",
    "CurveDivisor",
    "DualGraph",
    "ExceptionalCurve",
    "ExternalDivisor",
    "FiberConeReport",
    "FiberShape",
    "GammaResult",
    "InputError",
    "PrimeClass",
    "PrimeIdentity",
    "ProjDescription",
    "QDivisor",
    "ReesfiberError",
    "SBLProvider",
    "SBLSet",
    "SBLValidationError",
    "ValidationReport",
    "ZariskiDecomposition",
    "analytic_spread",
    "build_proj",
    "curve_degree",
    "euler_char",
    "gamma_exceptional",
    "h1_vanishes",
    "has_center",
    "intersect",
    "is_antinef",
    "is_finitely_generated",
    "prime_class",
    "radical_decomposition",
    "resolve_sbl",
    "restriction_degree",
    "round_up",
    "solve_contact",
    "validate_graph",
    "validate_sbl",
    "zariski_decompose",
    "zero_locus_components",
]
