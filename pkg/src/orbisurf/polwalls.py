"""Slopes, discriminants and walls for change of polarization.

Num is a lattice with a hyperbolic form of signature (1, rho - 1). A wall of
type (r, Delta) is the hyperplane xi.H = 0 for a primitive class xi with
-r^2 Delta / 4 <= xi^2 < 0.

Finiteness along a segment H_t = (1 - t) H1 + t H2: if xi.H_t = 0 then
-xi^2 <= B := r^2 Delta / 4, and comparing the positive definite forms
N_H(x) = -x^2 + 2 (x.H)^2 / H^2 at H1 and H_t gives
N_{H1}(xi) <= (2 C - 1) B, where C = (H1.H2)^2 / (H1^2 H2^2) bounds the
corresponding quantity for (H1, H_t). Each coordinate is then bounded by
sqrt((2 C - 1) B (N_{H1}^{-1})_{ii}), all computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import floor, gcd, isqrt

from . import kernels, linalg
from .divlat import signature
from .errors import OrbisurfError


@dataclass(frozen=True)
class NumLattice:
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        sig = signature(gram)
        if (sig.n_plus, sig.n_zero) != (1, 0):
            raise OrbisurfError("polwalls", f"Num lattice must have signature (1, rho-1), got {tuple(sig)}")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def dot(self, u, v):
        if len(u) != self.rank or len(v) != self.rank:
            raise OrbisurfError("polwalls", f"vectors must have length {self.rank}")
        return linalg.bilinear(self.gram, u, v)

    def sq(self, u):
        return self.dot(u, u)


@dataclass(frozen=True)
class WallSpec:
    r: int
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.r < 2:
            raise OrbisurfError("polwalls", f"rank must be at least 2, got {self.r}")
        if self.delta <= 0:
            raise OrbisurfError("polwalls", f"discriminant must be positive, got {self.delta}")

    @property
    def bound(self) -> Fraction:
        """r^2 Delta / 4, the largest admissible -xi^2."""
        return Fraction(self.r * self.r) * self.delta / 4

    @property
    def qmin(self) -> int:
        return -floor(self.bound)


@dataclass(frozen=True, order=True)
class Wall:
    xi: tuple[int, ...]
    contains_segment: bool = False

    def __post_init__(self):
        xi = tuple(int(x) for x in self.xi)
        object.__setattr__(self, "xi", xi)
        first = next((x for x in xi if x), 0)
        if first <= 0 or gcd(*xi) != 1:
            raise OrbisurfError("polwalls", f"{xi} is not a primitive canonically signed class")

    def to_json(self) -> dict:
        return {"xi": list(self.xi), "contains_segment": self.contains_segment}


def canonical(xi) -> tuple[int, ...]:
    """Primitive representative with first nonzero entry positive."""
    v = linalg.primitive(xi)
    first = next((x for x in v if x), 0)
    if first == 0:
        raise OrbisurfError("polwalls", "the zero class defines no wall")
    return v if first > 0 else tuple(-x for x in v)


def slope(L: NumLattice, c1, H, rank: int) -> Fraction:
    if rank < 1:
        raise OrbisurfError("polwalls", "slope needs positive rank")
    return Fraction(L.dot(c1, H), rank)


def discriminant(rank: int, c1sq, c2) -> Fraction:
    """2 r c_2 - (r - 1) c_1^2."""
    if rank < 1:
        raise OrbisurfError("polwalls", "discriminant needs positive rank")
    return 2 * rank * Fraction(c2) - (rank - 1) * Fraction(c1sq)


def subobject_wall_class(r: int, r_sub: int, c1, c1_sub) -> tuple[int, ...]:
    """xi = r c1(F') - r' c1(F) for a subsheaf F' of rank r'."""
    if not 0 < r_sub < r:
        raise OrbisurfError("polwalls", f"subobject rank {r_sub} must lie strictly between 0 and {r}")
    if len(c1) != len(c1_sub):
        raise OrbisurfError("polwalls", "Chern classes have different lengths")
    return tuple(r * b - r_sub * a for a, b in zip(c1, c1_sub))


def _check_positive(L: NumLattice, *hs):
    for h in hs:
        if L.sq(h) <= 0:
            raise OrbisurfError("polwalls", f"{tuple(h)} is not in the positive cone")
    for h in hs[1:]:
        if L.dot(hs[0], h) <= 0:
            raise OrbisurfError("polwalls", "polarizations lie in opposite components of the positive cone")


def cosh_distance_sq(L: NumLattice, H, H2) -> Fraction:
    _check_positive(L, H, H2)
    return Fraction(L.dot(H, H2) ** 2, L.sq(H) * L.sq(H2))


def is_on_wall(L: NumLattice, spec: WallSpec, xi, H) -> bool:
    _check_positive(L, H)
    if L.dot(xi, H) != 0:
        return False
    q = L.sq(xi)
    return -spec.bound <= q < 0


def certified_bounds(L: NumLattice, spec: WallSpec, H1, H2) -> list[int]:
    """Coordinate box containing every wall class that meets the segment [H1, H2]."""
    n = L.rank
    g = L.gram
    gh = linalg.matvec(g, H1)
    h1sq = L.sq(H1)
    N = [[-g[i][j] + Fraction(2 * gh[i] * gh[j], h1sq) for j in range(n)] for i in range(n)]
    Ninv = linalg.inverse(N)
    radius = spec.bound * (2 * cosh_distance_sq(L, H1, H2) - 1)
    return [isqrt(floor(radius * Ninv[i][i])) for i in range(n)]


def enumerate_walls(L: NumLattice, spec: WallSpec, H1, H2, backend: str | None = None) -> list[Wall]:
    """Walls of the given type crossing the segment from H1 to H2, sorted.

    A wall counts when xi.H1 and xi.H2 have strictly opposite signs, or when
    both vanish (the wall contains the whole segment; flagged).
    """
    _check_positive(L, H1, H2)
    bounds = certified_bounds(L, spec, H1, H2)
    hits = kernels.scan_box([list(r) for r in L.gram], list(H1), list(H2), bounds, spec.qmin, backend)
    return sorted(Wall(x, flag) for x, flag in hits)


def generic_check(L: NumLattice, spec: WallSpec, H) -> bool:
    """True iff H lies on no wall of the given type."""
    return not enumerate_walls(L, spec, H, H)


def brute_force_walls(L: NumLattice, spec: WallSpec, H1, H2, radius) -> list[Wall]:
    """Direct scan of the box |xi_i| <= radius[i], applying the definitions literally."""
    _check_positive(L, H1, H2)
    out = set()
    for x in product(*[range(-b, b + 1) for b in radius]):
        if gcd(*x) != 1:
            continue
        a, b = L.dot(x, H1), L.dot(x, H2)
        both = a == 0 and b == 0
        if not (both or a * b < 0):
            continue
        q = L.sq(x)
        if not -spec.bound <= q < 0:
            continue
        out.add(Wall(canonical(x), both))
    return sorted(out)
