"""Backend selection for the hot loops.

The compiled extension is used when it was built and ORBISURF_PURE_PYTHON is
not set to 1; otherwise the pure-Python twin is used. Both return identical
results.
"""

from __future__ import annotations

import os

from . import _kernels_py

_INT64_SAFE = 2**62

try:
    if os.environ.get("ORBISURF_PURE_PYTHON") == "1":
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def _fits_int64(gram, h1, h2, bounds) -> bool:
    n = len(bounds)
    q = sum(abs(gram[i][j]) * bounds[i] * bounds[j] for i in range(n) for j in range(n))
    s1 = sum(abs(sum(gram[i][j] * h1[j] for j in range(n))) * bounds[i] for i in range(n))
    s2 = sum(abs(sum(gram[i][j] * h2[j] for j in range(n))) * bounds[i] for i in range(n))
    return max(q, s1 * s2, s1, s2) < _INT64_SAFE


def scan_box(gram, h1, h2, bounds, qmin, backend: str | None = None):
    backend = backend or BACKEND
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        if _fits_int64(gram, h1, h2, bounds) and qmin > -_INT64_SAFE:
            return _ckernels.scan_box(gram, h1, h2, bounds, qmin)
    return _kernels_py.scan_box(gram, h1, h2, bounds, qmin)
