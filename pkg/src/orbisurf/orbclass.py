"""K-classes of zero-dimensional substacks on orbifold surfaces.

An orbifold surface is described only through its stacky points (cyclic
stabilizer mu_r acting on the cotangent plane with weights (w1, w2)) and,
when a pairing needs it, the integer chi(O_X). Skyscraper classes live in the
lattice spanned by [O_q] (q a non-stacky point) and [O_p (x) rho_i] for the
nontrivial irreducibles rho_i at each stacky point p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .characters import (
    GroupData,
    RepClass,
    char_table_cyclic,
    inner_product,
    regular_rep,
    tensor,
)
from .cyclotomic import CycloNum
from .errors import OrbisurfError


@dataclass(frozen=True)
class StackyPoint:
    label: str
    r: int
    weights: tuple[int, int]

    def __post_init__(self):
        if self.r < 1:
            raise OrbisurfError("orbclass", f"stabilizer order must be positive, got {self.r}")
        w = tuple(int(x) % self.r for x in self.weights)
        if len(w) != 2:
            raise OrbisurfError("orbclass", "need exactly two cotangent weights")
        if any(gcd(x, self.r) != 1 for x in w) and self.r > 1:
            raise OrbisurfError(
                "orbclass", f"weights {self.weights} mod {self.r} do not give an isolated fixed point"
            )
        object.__setattr__(self, "weights", w)

    @property
    def group(self) -> GroupData:
        return char_table_cyclic(self.r)

    def irrep(self, i: int) -> RepClass:
        return RepClass.irrep(self.group, i)

    @property
    def rho_omega(self) -> RepClass:
        return self.irrep(self.weights[0]) + self.irrep(self.weights[1])

    @property
    def rho_k(self) -> RepClass:
        return self.irrep(self.weights[0] + self.weights[1])

    def det_one_minus_omega(self, k: int) -> CycloNum:
        """det(id - rho_Omega(g^k)) = (1 - zeta^{w1 k})(1 - zeta^{w2 k})."""
        w1, w2 = self.weights
        z = CycloNum.zeta
        return (1 - z(self.r, w1 * k)) * (1 - z(self.r, w2 * k))


@dataclass(frozen=True)
class OrbSurface:
    points: tuple[StackyPoint, ...] = ()
    chi_o: int | None = None
    name: str = ""

    def __post_init__(self):
        labels = [p.label for p in self.points]
        if len(set(labels)) != len(labels):
            raise OrbisurfError("orbclass", "stacky point labels must be unique")

    def point(self, label: str) -> StackyPoint:
        for p in self.points:
            if p.label == label:
                return p
        raise OrbisurfError("orbclass", f"no stacky point labelled {label!r}")


@dataclass(frozen=True)
class KClassN:
    """n0 [O_q] + sum_k sum_{i>=1} n_{k,i} [O_{p_k} (x) rho_i]."""

    n0: int = 0
    parts: tuple[tuple[str, tuple[int, ...]], ...] = ()

    @classmethod
    def make(cls, n0: int, parts: dict | None = None) -> KClassN:
        items = tuple(sorted((k, tuple(int(x) for x in v)) for k, v in (parts or {}).items()))
        return cls(int(n0), items)

    def part(self, label: str, r: int) -> tuple[int, ...]:
        for k, v in self.parts:
            if k == label:
                if len(v) != r - 1:
                    raise OrbisurfError("orbclass", f"point {label} needs {r - 1} coefficients")
                return v
        return (0,) * (r - 1)

    def __add__(self, other: KClassN) -> KClassN:
        parts = dict(self.parts)
        for k, v in other.parts:
            parts[k] = tuple(a + b for a, b in zip(parts[k], v)) if k in parts else v
        return KClassN.make(self.n0 + other.n0, parts)

    def __neg__(self) -> KClassN:
        return KClassN.make(-self.n0, {k: tuple(-x for x in v) for k, v in self.parts})

    def __sub__(self, other: KClassN) -> KClassN:
        return self + (-other)

    def to_ext(self) -> ExtClass:
        return ExtClass(0, self.n0, tuple((k, (0,) + v) for k, v in self.parts))

    def to_json(self) -> dict:
        return {"n0": self.n0, "points": {k: list(v) for k, v in self.parts}}

    @classmethod
    def from_json(cls, obj: dict) -> KClassN:
        return cls.make(obj["n0"], obj.get("points", {}))


@dataclass(frozen=True)
class ExtClass:
    """m [O_X] + n0 [O_q] + sum over points of sum_{i>=0} v_i [O_p (x) rho_i].

    The trivial irreducible is kept explicit here, so this is a generating set
    rather than a basis; ``reduce`` rewrites it in the lattice basis.
    """

    m: int = 0
    n0: int = 0
    sky: tuple[tuple[str, tuple[int, ...]], ...] = ()

    @classmethod
    def make(cls, m=0, n0=0, sky: dict | None = None) -> ExtClass:
        items = tuple(sorted((k, tuple(int(x) for x in v)) for k, v in (sky or {}).items()))
        return cls(int(m), int(n0), items)

    def vec(self, p: StackyPoint) -> tuple[int, ...]:
        for k, v in self.sky:
            if k == p.label:
                if len(v) != p.r:
                    raise OrbisurfError("orbclass", f"point {p.label} needs {p.r} coefficients")
                return v
        return (0,) * p.r

    def __add__(self, other: ExtClass) -> ExtClass:
        sky = dict(self.sky)
        for k, v in other.sky:
            sky[k] = tuple(a + b for a, b in zip(sky[k], v)) if k in sky else v
        return ExtClass.make(self.m + other.m, self.n0 + other.n0, sky)

    def scale(self, c: int) -> ExtClass:
        return ExtClass.make(c * self.m, c * self.n0, {k: tuple(c * x for x in v) for k, v in self.sky})

    def twist_by_k(self, X: OrbSurface) -> ExtClass:
        """Tensor with K_X; only defined on skyscraper classes (m = 0)."""
        if self.m:
            raise OrbisurfError("orbclass", "[O_X] (x) K_X is not a skyscraper class")
        sky = {}
        for p in X.points:
            v = self.vec(p)
            shifted = RepClass(p.group, v)
            sky[p.label] = tensor(shifted, p.rho_k).mults
        return ExtClass.make(0, self.n0, sky)

    def reduce(self, X: OrbSurface) -> tuple[int, KClassN]:
        """Rewrite in the basis ([O_X], [O_q], nontrivial skyscrapers)."""
        n0 = self.n0
        parts = {}
        for p in X.points:
            v = self.vec(p)
            n0 += v[0]
            d = p.group.degrees
            parts[p.label] = tuple(v[i] - v[0] * d[i] for i in range(1, p.r))
        return self.m, KClassN.make(n0, parts)


@dataclass(frozen=True)
class OrbChern:
    untwisted: tuple[Fraction, Fraction, Fraction]
    twisted: tuple[tuple[str, int, CycloNum], ...] = field(default=())

    @classmethod
    def make(cls, untwisted, twisted: dict | None = None) -> OrbChern:
        items = tuple(sorted(((k[0], k[1], v) for k, v in (twisted or {}).items() if v), key=lambda t: t[:2]))
        return cls(tuple(Fraction(x) for x in untwisted), items)

    def sector(self, label: str, k: int) -> CycloNum:
        for lab, kk, v in self.twisted:
            if lab == label and kk == k:
                return v
        return CycloNum(1)

    def _as_dict(self):
        return {(lab, k): v for lab, k, v in self.twisted}

    def __add__(self, other: OrbChern) -> OrbChern:
        tw = self._as_dict()
        for key, v in other._as_dict().items():
            tw[key] = tw[key] + v if key in tw else v
        return OrbChern.make([a + b for a, b in zip(self.untwisted, other.untwisted)], tw)

    def scale(self, c) -> OrbChern:
        return OrbChern.make([c * a for a in self.untwisted], {k: v * c for k, v in self._as_dict().items()})

    def __sub__(self, other: OrbChern) -> OrbChern:
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, OrbChern):
            return NotImplemented
        return self.untwisted == other.untwisted and self._as_dict() == other._as_dict()

    def __hash__(self):
        return hash(self.untwisted)

    def to_json(self) -> dict:
        return {
            "untwisted": [{"num": str(x.numerator), "den": str(x.denominator)} for x in self.untwisted],
            "twisted": [{"point": lab, "element": k, "value": v.to_json()} for lab, k, v in self.twisted],
        }


ZERO_CHERN = OrbChern.make((0, 0, 0))


def orb_chern_skyscraper(p: StackyPoint, rho: RepClass) -> OrbChern:
    """Orbifold Chern character of O_p (x) rho.

    Untwisted part (0, 0, deg(rho)/r); the sector of g^k is
    det(id - rho_Omega(g^k)) * tr rho(g^k).
    """
    if rho.group != p.group:
        raise OrbisurfError("orbclass", "representation is not over the stabilizer of the point")
    chi = rho.character()
    tw = {(p.label, k): p.det_one_minus_omega(k) * chi[k] for k in range(1, p.r)}
    return OrbChern.make((0, 0, Fraction(rho.degree, p.r)), tw)


def orb_chern_q() -> OrbChern:
    return OrbChern.make((0, 0, 1))


def orb_chern(X: OrbSurface, a: KClassN | ExtClass) -> OrbChern:
    """Chern character of a skyscraper class (no [O_X] component)."""
    if isinstance(a, KClassN):
        a = a.to_ext()
    if a.m:
        raise OrbisurfError("orbclass", "orb_chern is only defined here for skyscraper classes")
    out = orb_chern_q().scale(a.n0)
    for p in X.points:
        v = a.vec(p)
        if any(v):
            out = out + orb_chern_skyscraper(p, RepClass(p.group, v))
    return out


@lru_cache(maxsize=None)
def _check_trivial_elimination(r: int, weights: tuple[int, int]) -> None:
    # [O_p (x) rho_0] = [O_q] - sum_{i>=1} d_i [O_p (x) rho_i], compared on Chern characters.
    p = StackyPoint("p", r, weights)
    lhs = orb_chern_skyscraper(p, p.irrep(0))
    rhs = orb_chern_q()
    for i, d in enumerate(p.group.degrees):
        if i:
            rhs = rhs - orb_chern_skyscraper(p, p.irrep(i)).scale(d)
    if lhs != rhs:
        raise OrbisurfError("orbclass", f"trivial-irrep elimination fails at mu_{r} {weights}")


def kclass_of_quotient(p: StackyPoint, v: RepClass) -> KClassN:
    """Lattice class of a substack supported at p whose coordinate ring is v."""
    if not v.is_genuine:
        raise OrbisurfError("orbclass", "quotient representation must have nonnegative multiplicities")
    _check_trivial_elimination(p.r, p.weights)
    d = p.group.degrees
    return KClassN.make(v.mults[0], {p.label: tuple(v.mults[i] - v.mults[0] * d[i] for i in range(1, p.r))})


@lru_cache(maxsize=None)
def _point_tables(r: int, weights: tuple[int, int]):
    """Inner-product tables used by the Euler form at one stacky point.

    Returns (plain, with_omega, with_k) where plain[j][i] = <chi_j, chi_i>,
    with_omega[j][i] = <chi_j, chi_{i (x) Omega}>, with_k[j][i] = <chi_j, chi_{i (x) K}>.
    """
    p = StackyPoint("p", r, weights)
    G = p.group
    chars = [p.irrep(i).character() for i in range(r)]
    omega = [tensor(p.irrep(i), p.rho_omega).character() for i in range(r)]
    kk = [tensor(p.irrep(i), p.rho_k).character() for i in range(r)]
    plain = [[inner_product(G, chars[j], chars[i]) for i in range(r)] for j in range(r)]
    with_omega = [[inner_product(G, chars[j], omega[i]) for i in range(r)] for j in range(r)]
    with_k = [[inner_product(G, chars[j], kk[i]) for i in range(r)] for j in range(r)]
    return plain, with_omega, with_k


def skyscraper_pairing(p: StackyPoint, i: int, j: int) -> int:
    """chi(O_p (x) rho_i, O_p (x) rho_j)."""
    plain, with_omega, with_k = _point_tables(p.r, p.weights)
    val = plain[j][i] - with_omega[j][i] + with_k[j][i]
    return int(val)


def euler_pairing(X: OrbSurface, a: ExtClass | KClassN, b: ExtClass | KClassN) -> int:
    """Euler form chi(a, b) extended bilinearly from the point-class table."""
    if isinstance(a, KClassN):
        a = a.to_ext()
    if isinstance(b, KClassN):
        b = b.to_ext()
    total = 0
    if a.m and b.m:
        if X.chi_o is None:
            raise OrbisurfError("orbclass", "chi(O_X) is required to pair [O_X] with itself")
        total += a.m * b.m * X.chi_o
    total += a.m * b.n0 + a.n0 * b.m
    for p in X.points:
        va, vb = a.vec(p), b.vec(p)
        plain, _, with_k = _point_tables(p.r, p.weights)
        if a.m:
            total += a.m * sum(vb[i] * int(plain[i][0]) for i in range(p.r))
        if b.m:
            total += b.m * sum(va[i] * int(with_k[0][i]) for i in range(p.r))
        for i in range(p.r):
            if va[i]:
                for j in range(p.r):
                    if vb[j]:
                        total += va[i] * vb[j] * skyscraper_pairing(p, i, j)
    return total


def hilb_dim(X: OrbSurface, alpha: KClassN) -> int:
    """Dimension of Hilb^alpha(X) from the closed formula.

    2 n0 + sum_k ( sum_i n_i <chi_0, chi_{i (x) K}>
                   - sum_{i,j} n_i n_j (<chi_j, chi_i> + <chi_j, chi_{i (x) K}> - <chi_j, chi_{i (x) Omega}>) )

    A negative value means no substack of class alpha exists; it is returned
    unchanged.
    """
    total = Fraction(2 * alpha.n0)
    for p in X.points:
        n = (0,) + alpha.part(p.label, p.r)
        plain, with_omega, with_k = _point_tables(p.r, p.weights)
        lin = sum(n[i] * with_k[0][i] for i in range(1, p.r))
        quad = sum(
            n[i] * n[j] * (plain[j][i] + with_k[j][i] - with_omega[j][i])
            for i in range(1, p.r)
            for j in range(1, p.r)
        )
        total += lin - quad
    assert total.denominator == 1
    return int(total)


def hilb_dim_via_pairing(X: OrbSurface, alpha: KClassN) -> int:
    """chi(O_X, alpha) + chi(alpha, O_X) - chi(alpha, alpha); needs no chi(O_X)."""
    ox = ExtClass.make(m=1)
    return euler_pairing(X, ox, alpha) + euler_pairing(X, alpha, ox) - euler_pairing(X, alpha, alpha)


def regular_class(p: StackyPoint) -> RepClass:
    return regular_rep(p.group)
