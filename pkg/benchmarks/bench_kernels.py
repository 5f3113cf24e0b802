"""Compare the compiled staircase kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--window 50]

The workload is the one the oracle runs most: build I_1..I_N for a few
monomial filtrations and check the graded law I_m I_n in I_{m+n}, plus the
closure and order of every I_n.
"""

import argparse
import math
import timeit

from reesfiber.oracle import _kernels_py
from reesfiber.oracle._backend import BACKEND, kernels

SPECS = [
    [(1, 2, 1), (2, 1, 1)],
    [(1, 5, 3), (3, 4, 2)],
    [(2, 3, 2), (5, 1, 1), (1, 4, 3)],
]


def ideals(k, spec, window):
    out = [None]
    for n in range(1, window + 1):
        cur = None
        for wx, wy, a in spec:
            v = k.valuation_ideal(wx, wy, math.ceil(n * a))
            cur = v if cur is None else k.intersection(cur, v)
        out.append(cur)
    return out


def workload(k, window):
    for spec in SPECS:
        ii = ideals(k, spec, window)
        for m in range(1, window):
            for n in range(m, window - m + 1):
                assert k.contains(ii[m + n], k.product(ii[m], ii[n]))
        for n in range(1, window + 1):
            k.closure(ii[n])
            k.order(ii[n], 1, 1)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--window", type=int, default=50)
    args = p.parse_args()

    backends = [("python", _kernels_py)]
    if BACKEND == "compiled":
        backends.append(("compiled", kernels))
    else:
        print("compiled extension not built; timing the pure-Python kernels only")

    times = {}
    for name, k in backends:
        times[name] = min(timeit.repeat(lambda: workload(k, args.window), number=1, repeat=args.repeat))
        print(f"{name:>9}: {times[name] * 1000:9.1f} ms (best of {args.repeat})")
    if len(times) == 2:
        print(f"  speedup: {times['python'] / times['compiled']:9.1f}x")


if __name__ == "__main__":
    main()
