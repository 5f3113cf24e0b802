"""Pure-Python staircase kernels.

A staircase is a list of lattice points ``(i, j)`` sorted by ``i`` ascending
(hence ``j`` strictly descending): the minimal monomial generators
``x^i y^j`` of a monomial ideal of k[[x, y]].  ``_kernels.pyx`` implements
the same functions with the same algorithms over C integers.
"""

from bisect import bisect_right


def minimize(points):
    """Minimal elements (componentwise order) of a finite set of lattice points."""
    h = {}
    for i, j in points:
        cur = h.get(i)
        if cur is None or j < cur:
            h[i] = j
    out = []
    best = None
    for i in sorted(h):
        j = h[i]
        if best is None or j < best:
            out.append((i, j))
            best = j
    return out


def product(a, b):
    if not a or not b:
        return []
    width = a[-1][0] + b[-1][0] + 1
    h = [-1] * width
    for ai, aj in a:
        for bi, bj in b:
            i = ai + bi
            j = aj + bj
            cur = h[i]
            if cur < 0 or j < cur:
                h[i] = j
    return _sweep(h)


def intersection(a, b):
    if not a or not b:
        return []
    width = max(a[-1][0], b[-1][0]) + 1
    h = [-1] * width
    for ai, aj in a:
        for bi, bj in b:
            i = ai if ai > bi else bi
            j = aj if aj > bj else bj
            cur = h[i]
            if cur < 0 or j < cur:
                h[i] = j
    return _sweep(h)


def _sweep(h):
    out = []
    best = -1
    for i, j in enumerate(h):
        if j >= 0 and (best < 0 or j < best):
            out.append((i, j))
            best = j
    return out


def contains(a, b):
    """True iff every point of ``b`` dominates some point of ``a``."""
    xs = [i for i, _ in a]
    for p, q in b:
        k = bisect_right(xs, p)
        if k == 0 or a[k - 1][1] > q:
            return False
    return True


def valuation_ideal(wx, wy, c):
    """Staircase of {(i, j) : wx*i + wy*j >= c}."""
    if c <= 0:
        return [(0, 0)]
    imax = -(-c // wx)
    pts = []
    for i in range(imax + 1):
        rest = c - wx * i
        pts.append((i, -(-rest // wy) if rest > 0 else 0))
    return minimize(pts)


def order(a, wx, wy):
    """min over generators of wx*i + wy*j."""
    return min(wx * i + wy * j for i, j in a)


def closure(a):
    """Staircase of the lattice points in the Newton polyhedron of ``a``."""
    if len(a) < 2:
        return list(a)
    hull = []
    for p in a:
        while len(hull) >= 2:
            (ox, oy), (px, py) = hull[-2], hull[-1]
            if (px - ox) * (p[1] - oy) - (py - oy) * (p[0] - ox) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    pts = []
    for k in range(len(hull) - 1):
        (x1, y1), (x2, y2) = hull[k], hull[k + 1]
        dx = x2 - x1
        for x in range(x1, x2):
            num = y1 * dx + (y2 - y1) * (x - x1)
            pts.append((x, -(-num // dx)))
    pts.append(hull[-1])
    return minimize(pts)
