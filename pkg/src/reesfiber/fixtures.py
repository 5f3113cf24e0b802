"""The three small reference configurations used throughout the tests and docs.

FIX-A: a single (-1)-curve.
FIX-B: a single (-1)-curve met once by an external divisor F.
FIX-C: two adjacent (-2)-curves, F meeting the first.
"""

from .dualgraph import DualGraph, ExceptionalCurve, ExternalDivisor, QDivisor


def fix_a() -> DualGraph:
    return DualGraph.from_edges([ExceptionalCurve(0, -1)])


def fix_b() -> DualGraph:
    return DualGraph.from_edges([ExceptionalCurve(0, -1)], externals=[ExternalDivisor("F", (1,))])


def fix_c() -> DualGraph:
    return DualGraph.from_edges(
        [ExceptionalCurve(0, -2), ExceptionalCurve(1, -2)],
        [(0, 1, 1)],
        [ExternalDivisor("F", (1, 0))],
    )


def divisor_e1() -> QDivisor:
    return QDivisor({0: 1})


def divisor_f() -> QDivisor:
    return QDivisor(ext={"F": 1})


FIXTURES = {
    "fixA": (fix_a, divisor_e1),
    "fixB": (fix_b, divisor_f),
    "fixC": (fix_c, divisor_f),
}
