"""Independent reference computations used to check the library."""

import itertools
import math
from fractions import Fraction

import sympy


def _intersect_direct(g, coeffs_exc, d, col):
    total = Fraction(0)
    for k, c in enumerate(g.curves):
        total += coeffs_exc.get(c.id, 0) * g.matrix[k][col]
    for x in g.externals:
        total += d.ext.get(x.id, 0) * x.meets[col]
    return total


def zariski_admissible_supports(g, d):
    """Every support S whose contact solution is strictly positive on S and antinef overall.

    Linear systems are solved with sympy, independently of the library solver.
    """
    ids = list(g.curve_ids)
    found = []
    for size in range(len(ids) + 1):
        for support in itertools.combinations(range(len(ids)), size):
            b = {}
            if support:
                m = sympy.Matrix([[g.matrix[i][j] for i in support] for j in support])
                rhs = sympy.Matrix([-_intersect_direct(g, dict(d.exc), d, j) for j in support])
                sol = m.LUsolve(rhs)
                b = {ids[i]: Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for i, v in zip(support, sol)}
                if any(v <= 0 for v in b.values()):
                    continue
            total = dict(d.exc)
            for k, v in b.items():
                total[k] = total.get(k, 0) + v
            if all(_intersect_direct(g, total, d, col) <= 0 for col in range(len(ids))):
                found.append((frozenset(ids[i] for i in support), b))
    return found


def lp_gamma(spec, w):
    """min w.p over {p >= 0 : v_k(p) >= a_k}, by enumerating vertices of the polyhedron."""
    lines = [(v.wx, v.wy, a) for v, a in spec.terms] + [(1, 0, Fraction(0)), (0, 1, Fraction(0))]
    best = None
    for (a1, b1, c1), (a2, b2, c2) in itertools.combinations(lines, 2):
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        x = Fraction(c1 * b2 - c2 * b1) / det
        y = Fraction(a1 * c2 - a2 * c1) / det
        if x < 0 or y < 0:
            continue
        if all(v.wx * x + v.wy * y >= a for v, a in spec.terms):
            val = w.wx * x + w.wy * y
            if best is None or val < best:
                best = val
    return best


def attainment_bound(spec):
    """A window containing den * |det| for every vertex of the polyhedron.

    A vertex cut out by two lines with determinant d has coordinates in
    (1/(den*d))Z, so n*vertex is a lattice point of I_n for n = den*d.
    """
    den = math.lcm(*(a.denominator for _, a in spec.terms))
    dets = [v.wx for v, _ in spec.terms] + [v.wy for v, _ in spec.terms]
    for (v1, _), (v2, _) in itertools.combinations(spec.terms, 2):
        dets.append(abs(v1.wx * v2.wy - v2.wx * v1.wy))
    return den * max(dets)


def brute_staircase(region, box):
    """Minimal generators of {(i, j) in box : region(i, j)} by exhaustive scan."""
    out = []
    best = box
    for i in range(box):
        j = next((j for j in range(best) if region(i, j)), None)
        if j is not None:
            out.append((i, j))
            best = j
    return out
