"""Pure-Python wall scan; mirrors ``_ckernels.scan_box`` exactly."""

from __future__ import annotations

from itertools import product
from math import gcd


def scan_box(gram, h1, h2, bounds, qmin):
    """Primitive, canonically signed x in the box |x_i| <= bounds[i] with

    qmin <= x.x < 0 and either (x.h1)(x.h2) < 0 or x.h1 = x.h2 = 0.
    Returns tuples (x, contains_segment) in lexicographic order.
    """
    n = len(bounds)
    a1 = [sum(gram[i][j] * h1[j] for j in range(n)) for i in range(n)]
    a2 = [sum(gram[i][j] * h2[j] for j in range(n)) for i in range(n)]
    ranges = [range(0, bounds[0] + 1)] + [range(-b, b + 1) for b in bounds[1:]]
    out = []
    for x in product(*ranges):
        first = next((v for v in x if v), 0)
        if first <= 0:
            continue
        s1 = sum(a * v for a, v in zip(a1, x))
        s2 = sum(a * v for a, v in zip(a2, x))
        both_zero = s1 == 0 and s2 == 0
        if not both_zero and s1 * s2 >= 0:
            continue
        q = 0
        for i in range(n):
            if x[i]:
                row = gram[i]
                q += x[i] * sum(row[j] * x[j] for j in range(n))
        if q >= 0 or q < qmin:
            continue
        if gcd(*x) != 1:
            continue
        out.append((x, both_zero))
    return out
