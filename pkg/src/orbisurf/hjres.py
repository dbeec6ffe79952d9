"""Hirzebruch-Jung resolution of cyclic quotient surface singularities.

A singularity 1/r(1, a) is C^2 modulo x -> zeta x, y -> zeta^a y. Its minimal
resolution is a chain of smooth rational curves with self-intersections
-b_1, ..., -b_s where r/a = b_1 - 1/(b_2 - 1/(... - 1/b_s)).

Orientation: the strict transform of the x-axis {y = 0} meets the b_1 end of
the chain and the strict transform of the y-axis {x = 0} meets the b_s end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import OrbisurfError

X_AXIS = "x-axis"
Y_AXIS = "y-axis"


@dataclass(frozen=True)
class SingType:
    r: int
    a: int

    def __post_init__(self):
        if self.r < 1:
            raise OrbisurfError("hjres", f"order must be positive, got {self.r}")
        if self.r == 1:
            if self.a != 0:
                raise OrbisurfError("hjres", "the smooth marker is 1/1(1,0)")
            return
        if not 1 <= self.a <= self.r - 1 or gcd(self.a, self.r) != 1:
            raise OrbisurfError("hjres", f"1/{self.r}(1,{self.a}) is not an isolated cyclic quotient")

    @property
    def is_smooth(self) -> bool:
        return self.r == 1

    @property
    def swapped(self) -> SingType:
        """The same singularity with the coordinate axes exchanged: 1/r(1, a^-1)."""
        if self.is_smooth:
            return self
        return SingType(self.r, pow(self.a, -1, self.r))

    def canonical(self) -> SingType:
        """Representative with the smaller of a and a^-1 mod r."""
        if self.is_smooth:
            return self
        return min(self, self.swapped, key=lambda t: t.a)

    def __str__(self):
        return f"1/{self.r}(1,{self.a})"


SMOOTH = SingType(1, 0)


@dataclass(frozen=True)
class HJChain:
    self_ints: tuple[int, ...]
    first_meets: str = X_AXIS

    @property
    def length(self) -> int:
        return len(self.self_ints)

    @property
    def last_meets(self) -> str:
        return Y_AXIS if self.first_meets == X_AXIS else X_AXIS

    def gram(self) -> list[list[int]]:
        n = len(self.self_ints)
        g = [[0] * n for _ in range(n)]
        for i, s in enumerate(self.self_ints):
            g[i][i] = s
            if i + 1 < n:
                g[i][i + 1] = g[i + 1][i] = 1
        return g

    def reversed(self) -> HJChain:
        return HJChain(self.self_ints[::-1], self.last_meets)


def continued_fraction(bs) -> Fraction:
    """Evaluate b_1 - 1/(b_2 - 1/(... - 1/b_s))."""
    bs = list(bs)
    if not bs:
        raise OrbisurfError("hjres", "empty continued fraction")
    val = Fraction(bs[-1])
    for b in reversed(bs[:-1]):
        val = b - 1 / val
    return val


def hj_chain(t: SingType) -> HJChain:
    """Minimal resolution chain of 1/r(1, a); empty for the smooth marker."""
    if t.is_smooth:
        return HJChain(())
    bs = []
    n, d = t.r, t.a
    while d:
        b = -(-n // d)  # ceil
        bs.append(b)
        n, d = d, b * d - n
    chain = HJChain(tuple(-b for b in bs))
    assert continued_fraction(bs) == Fraction(t.r, t.a)
    return chain


def normalize_fixed_point(r: int, weights: tuple[int, int]) -> SingType:
    """Singularity type of C^2/mu_r for the generator acting by (zeta^u1, zeta^u2).

    Reparametrizing the generator so the first weight becomes 1 gives
    a = u2 * u1^{-1} mod r. The orientation is preserved: the first weight
    still belongs to the x coordinate.
    """
    if r < 1:
        raise OrbisurfError("hjres", f"order must be positive, got {r}")
    if r == 1:
        return SMOOTH
    u1, u2 = (w % r for w in weights)
    if gcd(u1, r) != 1 or gcd(u2, r) != 1:
        raise OrbisurfError(
            "hjres", f"weights {tuple(weights)} mod {r} fix a curve; the quotient point is not isolated"
        )
    return SingType(r, u2 * pow(u1, -1, r) % r)
