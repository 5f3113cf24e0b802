# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled staircase kernels; same contracts as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef i64* _unpack(list pts, Py_ssize_t* n, int which) except NULL:
    cdef Py_ssize_t k, m = len(pts)
    cdef i64* out = <i64*> malloc((m if m > 0 else 1) * sizeof(i64))
    if out == NULL:
        raise MemoryError()
    for k in range(m):
        out[k] = pts[k][which]
    n[0] = m
    return out


cdef list _sweep(i64* h, Py_ssize_t width):
    cdef list out = []
    cdef i64 best = -1
    cdef Py_ssize_t i
    for i in range(width):
        if h[i] >= 0 and (best < 0 or h[i] < best):
            out.append((i, h[i]))
            best = h[i]
    return out


def minimize(points):
    cdef list pts = list(points)
    if not pts:
        return []
    cdef Py_ssize_t n, k
    cdef i64* xs = _unpack(pts, &n, 0)
    cdef i64* ys = NULL
    cdef i64* h = NULL
    cdef i64 width = 0
    try:
        ys = _unpack(pts, &n, 1)
        for k in range(n):
            if xs[k] < 0 or ys[k] < 0:
                raise ValueError("lattice points must be nonnegative")
            if xs[k] + 1 > width:
                width = xs[k] + 1
        h = <i64*> malloc(width * sizeof(i64))
        if h == NULL:
            raise MemoryError()
        for k in range(width):
            h[k] = -1
        for k in range(n):
            if h[xs[k]] < 0 or ys[k] < h[xs[k]]:
                h[xs[k]] = ys[k]
        return _sweep(h, width)
    finally:
        free(xs)
        free(ys)
        free(h)


cdef list _combine(list a, list b, bint is_product):
    if not a or not b:
        return []
    cdef Py_ssize_t na, nb, p, q
    cdef i64 i, j, width
    cdef i64* ax = _unpack(a, &na, 0)
    cdef i64* ay = NULL
    cdef i64* bx = NULL
    cdef i64* by = NULL
    cdef i64* h = NULL
    try:
        ay = _unpack(a, &na, 1)
        bx = _unpack(b, &nb, 0)
        by = _unpack(b, &nb, 1)
        if is_product:
            width = ax[na - 1] + bx[nb - 1] + 1
        else:
            width = (ax[na - 1] if ax[na - 1] > bx[nb - 1] else bx[nb - 1]) + 1
        h = <i64*> malloc(width * sizeof(i64))
        if h == NULL:
            raise MemoryError()
        for p in range(width):
            h[p] = -1
        for p in range(na):
            for q in range(nb):
                if is_product:
                    i = ax[p] + bx[q]
                    j = ay[p] + by[q]
                else:
                    i = ax[p] if ax[p] > bx[q] else bx[q]
                    j = ay[p] if ay[p] > by[q] else by[q]
                if h[i] < 0 or j < h[i]:
                    h[i] = j
        return _sweep(h, width)
    finally:
        free(ax)
        free(ay)
        free(bx)
        free(by)
        free(h)


def product(a, b):
    return _combine(list(a), list(b), True)


def intersection(a, b):
    return _combine(list(a), list(b), False)


def contains(a, b):
    cdef list la = list(a), lb = list(b)
    cdef Py_ssize_t na, lo, hi, mid, k
    cdef i64 p, q
    cdef i64* ax = _unpack(la, &na, 0)
    cdef i64* ay = NULL
    try:
        ay = _unpack(la, &na, 1)
        for k in range(len(lb)):
            p = lb[k][0]
            q = lb[k][1]
            # rightmost generator with x <= p
            lo = 0
            hi = na
            while lo < hi:
                mid = (lo + hi) // 2
                if ax[mid] <= p:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == 0 or ay[lo - 1] > q:
                return False
        return True
    finally:
        free(ax)
        free(ay)


def valuation_ideal(i64 wx, i64 wy, i64 c):
    if c <= 0:
        return [(0, 0)]
    cdef i64 imax = (c + wx - 1) // wx
    cdef i64 i, rest, j, best = -1
    cdef list out = []
    for i in range(imax + 1):
        rest = c - wx * i
        j = (rest + wy - 1) // wy if rest > 0 else 0
        if best < 0 or j < best:
            out.append((i, j))
            best = j
    return out


def order(a, i64 wx, i64 wy):
    cdef i64 best = -1, v
    for i, j in a:
        v = wx * <i64> i + wy * <i64> j
        if best < 0 or v < best:
            best = v
    if best < 0:
        raise ValueError("order of the zero ideal is undefined")
    return best


def closure(a):
    cdef list la = list(a)
    if len(la) < 2:
        return la
    cdef list hull = []
    cdef i64 ox, oy, px, py, x1, y1, x2, y2, dx, x, num
    for pt in la:
        while len(hull) >= 2:
            ox, oy = hull[len(hull) - 2]
            px, py = hull[len(hull) - 1]
            if (px - ox) * (<i64> pt[1] - oy) - (py - oy) * (<i64> pt[0] - ox) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    cdef list pts = []
    cdef Py_ssize_t k
    for k in range(len(hull) - 1):
        x1, y1 = hull[k]
        x2, y2 = hull[k + 1]
        dx = x2 - x1
        for x in range(x1, x2):
            num = y1 * dx + (y2 - y1) * (x - x1)
            # ceil division for dx > 0
            if num >= 0:
                pts.append((x, (num + dx - 1) // dx))
            else:
                pts.append((x, -((-num) // dx)))
    pts.append(hull[len(hull) - 1])
    return minimize(pts)
