from fractions import Fraction

import pytest

from generators import random_divisor, random_graph, random_sbl
from reesfiber.basloc import resolve_sbl
from reesfiber.dualgraph import DualGraph, ExceptionalCurve, QDivisor
from reesfiber.errors import InputError
from reesfiber.fibercone import analytic_spread
from reesfiber.projmodel import CenterSpec, FiberShape, build_proj, gamma_exceptional, has_center
from reesfiber.zariski import zariski_decompose

DELTA_A = QDivisor({0: 1})
DELTA_B = QDivisor({0: 1}, {"F": 1})
DELTA_C = QDivisor({0: Fraction(2, 3), 1: Fraction(1, 3)}, {"F": 1})


def test_build_proj_fixtures(fix_a, fix_b, fix_c):
    p = build_proj(fix_a, DELTA_A, resolve_sbl(fix_a, DELTA_A, "rational"))
    assert p.kept == {0} and p.contracted == () and p.removed == ()
    assert p.proper and p.noetherian and p.fiber_shape is FiberShape.PURE_DIM_ONE_OPEN

    p = build_proj(fix_c, DELTA_C, resolve_sbl(fix_c, DELTA_C, "rational"))
    assert p.kept == frozenset() and p.contracted == (frozenset({0, 1}),)
    assert p.contracted_points == 1 and p.proper and p.fiber_shape is FiberShape.FINITE_POINT

    p = build_proj(fix_b, DELTA_B, resolve_sbl(fix_b, DELTA_B, "explicit", [[0]]))
    assert p.kept == frozenset() and p.removed == (frozenset({0}),)
    assert not p.proper and not p.noetherian and p.fiber_shape is FiberShape.EMPTY


def test_centers(fix_b, fix_c):
    assert has_center(fix_b, DELTA_B, resolve_sbl(fix_b, DELTA_B, "rational"), CenterSpec.on_curve(0))
    full_b = resolve_sbl(fix_b, DELTA_B, "explicit", [[0]])
    assert not has_center(fix_b, DELTA_B, full_b, CenterSpec.on_curve(0))
    assert has_center(fix_b, DELTA_B, full_b, CenterSpec.off_exceptional())
    full_c = resolve_sbl(fix_c, DELTA_C, "explicit", [[0, 1]])
    assert not has_center(fix_c, DELTA_C, full_c, CenterSpec.point_on(0))
    assert not has_center(fix_c, DELTA_C, full_c, CenterSpec.point_on(0, 1))


def test_center_point_off_sbl_but_meeting_it():
    # A3 chain with D = E1: sBL = {E2} is admissible; E1 pairs negatively
    g = DualGraph.from_edges(
        [ExceptionalCurve(0, -2), ExceptionalCurve(1, -2), ExceptionalCurve(2, -2)], [(0, 1, 1), (1, 2, 1)]
    )
    delta = zariski_decompose(g, QDivisor({1: 1})).Delta
    sbl = resolve_sbl(g, delta, "explicit", [[2]])
    assert has_center(g, delta, sbl, CenterSpec.point_on(1))
    assert has_center(g, delta, sbl, CenterSpec.point_on(0, 1))
    assert not has_center(g, delta, sbl, CenterSpec.point_on(1, 2))
    with pytest.raises(InputError):
        has_center(g, delta, sbl, CenterSpec.point_on(0, 2))
    p = build_proj(g, delta, sbl)
    assert p.kept == {1} and p.contracted == (frozenset({0}),) and p.removed == (frozenset({2}),)
    assert p.spread == 2 and not p.proper


@pytest.mark.parametrize(
    "spec",
    [CenterSpec.on_curve(5), CenterSpec.point_on(0, 1, 0), CenterSpec.point_on(), CenterSpec("off_exceptional", (0,))],
)
def test_center_input_errors(fix_c, spec):
    with pytest.raises(InputError):
        has_center(fix_c, DELTA_C, resolve_sbl(fix_c, DELTA_C, "rational"), spec)


def test_gamma(fix_a, fix_b, fix_c):
    r = gamma_exceptional(fix_a, DELTA_A, resolve_sbl(fix_a, DELTA_A, "rational"), 0)
    assert (r.value, r.attained) == (1, True)
    r = gamma_exceptional(fix_c, DELTA_C, resolve_sbl(fix_c, DELTA_C, "rational"), 1)
    assert (r.value, r.attained) == (Fraction(1, 3), True)
    r = gamma_exceptional(fix_b, DELTA_B, resolve_sbl(fix_b, DELTA_B, "explicit", [[0]]), 0)
    assert (r.value, r.attained) == (1, False)
    with pytest.raises(InputError):
        gamma_exceptional(fix_b, DELTA_B, resolve_sbl(fix_b, DELTA_B, "rational"), 1)


def test_random_invariants(rng):
    shapes = {0: FiberShape.EMPTY, 1: FiberShape.FINITE_POINT, 2: FiberShape.PURE_DIM_ONE_OPEN}
    for _ in range(100):
        g = random_graph(rng)
        delta = zariski_decompose(g, random_divisor(rng, g)).Delta
        sbl = random_sbl(rng, g, delta)
        p = build_proj(g, delta, sbl)
        parts = [p.kept, *p.contracted, *p.removed]
        assert sorted(c for part in parts for c in part) == sorted(g.curve_ids)
        assert p.noetherian == p.proper == (not p.removed)
        assert p.fiber_shape is shapes[analytic_spread(g, delta, sbl)]
        for comp in p.contracted:
            for bad in p.removed:
                assert not any(g.adjacent(a, b) for a in comp for b in bad)
        for c in g.curve_ids:
            on = has_center(g, delta, sbl, CenterSpec.on_curve(c))
            assert on == gamma_exceptional(g, delta, sbl, c).attained == (c not in sbl)
