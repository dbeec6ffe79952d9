# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled wall scan over an integer box; see ``_kernels_py.scan_box``."""

from libc.stdlib cimport malloc, free


cdef long long _gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


def scan_box(gram, h1, h2, bounds, long long qmin):
    cdef int n = len(bounds)
    cdef int i, j, first
    cdef long long s1, s2, q, row, g
    cdef bint both_zero
    cdef long long *G = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *a1 = <long long *> malloc(n * sizeof(long long))
    cdef long long *a2 = <long long *> malloc(n * sizeof(long long))
    cdef long long *b = <long long *> malloc(n * sizeof(long long))
    cdef long long *x = <long long *> malloc(n * sizeof(long long))
    out = []
    try:
        for i in range(n):
            b[i] = bounds[i]
            for j in range(n):
                G[i * n + j] = gram[i][j]
        for i in range(n):
            a1[i] = 0
            a2[i] = 0
            for j in range(n):
                a1[i] += G[i * n + j] * <long long> h1[j]
                a2[i] += G[i * n + j] * <long long> h2[j]
            x[i] = -b[i]
        x[0] = 0
        while True:
            first = 0
            for i in range(n):
                if x[i] != 0:
                    first = 1 if x[i] > 0 else -1
                    break
            if first > 0:
                s1 = 0
                s2 = 0
                for i in range(n):
                    s1 += a1[i] * x[i]
                    s2 += a2[i] * x[i]
                both_zero = s1 == 0 and s2 == 0
                if both_zero or (s1 > 0 and s2 < 0) or (s1 < 0 and s2 > 0):
                    q = 0
                    for i in range(n):
                        if x[i]:
                            row = 0
                            for j in range(n):
                                row += G[i * n + j] * x[j]
                            q += x[i] * row
                    if q < 0 and q >= qmin:
                        g = 0
                        for i in range(n):
                            g = _gcd(g, x[i])
                        if g == 1:
                            out.append((tuple([x[i] for i in range(n)]), bool(both_zero)))
            i = n - 1
            while i >= 0:
                x[i] += 1
                if x[i] <= b[i]:
                    break
                x[i] = 0 if i == 0 else -b[i]
                i -= 1
            if i < 0:
                break
    finally:
        free(G)
        free(a1)
        free(a2)
        free(b)
        free(x)
    return out
