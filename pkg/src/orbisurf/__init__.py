"""Exact invariants of orbifold surfaces, quotient resolutions and elliptic fibers."""

from .errors import OrbisurfError

__version__ = "0.1.0"

__all__ = ["OrbisurfError", "__version__"]
