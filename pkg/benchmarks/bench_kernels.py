"""Time the wall-scan kernel with the compiled and the pure-Python backend.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time
from fractions import Fraction

from orbisurf import kernels
from orbisurf.polwalls import NumLattice, WallSpec, certified_bounds

WORKLOADS = [
    ("rank2 short", ((1, 0), (0, -1)), WallSpec(2, 4), (2, 1), (2, -1)),
    ("rank2 long", ((1, 0), (0, -1)), WallSpec(3, 4), (5, 4), (5, -4)),
    ("rank3", ((1, 0, 0), (0, -1, 0), (0, 0, -1)), WallSpec(3, Fraction(7, 2)), (6, 3, -4), (6, -1, 2)),
    ("rank4", ((2, 1, 0, 0), (1, -2, 0, 0), (0, 0, -2, 1), (0, 0, 1, -2)), WallSpec(2, 8), (3, 1, 0, 0), (4, 0, 1, 1)),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    if kernels.BACKEND != "cython":
        print("compiled kernels not built; only the Python backend is timed")
    print(f"{'workload':<14}{'box':>12}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, gram, spec, h1, h2 in WORKLOADS:
        L = NumLattice(gram)
        bounds = certified_bounds(L, spec, h1, h2)
        g = [list(r) for r in L.gram]
        call = lambda b: kernels.scan_box(g, list(h1), list(h2), bounds, spec.qmin, b)
        box = 1
        for b in bounds:
            box *= 2 * b + 1
        tp, ref = best_of(lambda: call("python"), args.repeat)
        if kernels.BACKEND == "cython":
            tc, got = best_of(lambda: call("cython"), args.repeat)
            assert got == ref, name
            print(f"{name:<14}{box:>12}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
        else:
            print(f"{name:<14}{box:>12}{tp:>12.4f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
