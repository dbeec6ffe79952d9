"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored over the power basis zeta_N^0, ..., zeta_N^{N-1} and kept
reduced modulo the N-th cyclotomic polynomial, so the coefficient vector is a
canonical representative. Mixed-conductor operations lift both operands to the
lcm of the conductors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from .errors import OrbisurfError


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # Coefficients are low-degree first; den is monic.
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    assert not any(num), "non-exact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise OrbisurfError("cyclotomic", f"conductor must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def _reduce(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    work = list(coeffs)
    for k in range(len(work) - 1, deg - 1, -1):
        c = work[k]
        if c:
            for j in range(deg):
                work[k - deg + j] -= c * phi[j]
            work[k] = Fraction(0)
    return tuple(work[:deg]) + (Fraction(0),) * (n - deg)


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _mobius(n: int) -> int:
    sign, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1
    return -sign if n > 1 else sign


class CycloNum:
    """An element of Q(zeta_N) with canonical coefficients.

    >>> z = CycloNum.zeta(4)
    >>> z * z == -1
    True
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs=()):
        if conductor < 1:
            raise OrbisurfError("cyclotomic", f"conductor must be positive, got {conductor}")
        vec = [Fraction(0)] * conductor
        for k, c in enumerate(coeffs):
            vec[k % conductor] += Fraction(c)
        self.conductor = conductor
        self.coeffs = _reduce(vec, conductor)
        self._hash = None

    @classmethod
    def zeta(cls, n: int, power: int = 1) -> CycloNum:
        vec = [0] * n
        vec[power % n] = 1
        return cls(n, vec)

    @classmethod
    def rational(cls, q) -> CycloNum:
        return cls(1, [Fraction(q)])

    def lift(self, m: int) -> CycloNum:
        """Re-express over conductor m, which must be a multiple of N."""
        if m % self.conductor:
            raise OrbisurfError("cyclotomic", f"cannot lift conductor {self.conductor} to {m}")
        step = m // self.conductor
        vec = [Fraction(0)] * m
        for k, c in enumerate(self.coeffs):
            if c:
                vec[k * step] += c
        return CycloNum(m, vec)

    def _coerce(self, other) -> tuple[CycloNum, CycloNum]:
        if isinstance(other, (int, Rational)):
            other = CycloNum(self.conductor, [Fraction(other)])
        elif not isinstance(other, CycloNum):
            return NotImplemented, NotImplemented
        if other.conductor == self.conductor:
            return self, other
        m = _lcm(self.conductor, other.conductor)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CycloNum(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CycloNum(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        n = a.conductor
        vec = [Fraction(0)] * n
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        vec[(i + j) % n] += x * y
        return CycloNum(n, vec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            q = Fraction(other)
            return CycloNum(self.conductor, [c / q for c in self.coeffs])
        return NotImplemented

    def conj(self) -> CycloNum:
        n = self.conductor
        vec = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            vec[(-k) % n] += c
        return CycloNum(n, vec)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational:
            raise OrbisurfError("cyclotomic", f"{self!r} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a.coeffs == b.coeffs

    def normalized_trace(self) -> Fraction:
        """Trace to Q divided by the field degree; independent of the conductor."""
        total = Fraction(0)
        for k, c in enumerate(self.coeffs):
            if c:
                m = self.conductor // gcd(self.conductor, k)
                total += c * Fraction(_mobius(m), _totient(m))
        return total

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.normalized_trace())
        return self._hash

    def __repr__(self):
        if self.is_rational:
            return f"CycloNum({self.coeffs[0]})"
        terms = [f"{c}*z{self.conductor}^{k}" for k, c in enumerate(self.coeffs) if c]
        return "CycloNum(" + " + ".join(terms) + ")"

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [{"num": str(c.numerator), "den": str(c.denominator)} for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> CycloNum:
        coeffs = [Fraction(int(c["num"]), int(c["den"])) for c in obj["coeffs"]]
        return cls(int(obj["conductor"]), coeffs)
