"""Intersection lattices spanned by curves on a smooth projective surface.

A ``DivLattice`` records a list of curves, their integer Gram matrix, the
canonical degrees K.C, geometric genera and (optional) fiber multiplicities,
together with a point-incidence model: for each point where curves meet, how
many local branches of each curve pass through it and the local intersection
number of every pair. The Gram matrix alone cannot tell a tacnode from two
transverse crossings, so the incidence model is kept in step with the Gram
through contractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import NamedTuple

from . import linalg
from .errors import OrbisurfError


class SignatureReport(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus

    def is_hyperbolic(self) -> bool:
        """Signature (1, rank - 1) on the nondegenerate quotient."""
        return self.n_plus == 1


def signature(gram) -> SignatureReport:
    return SignatureReport(*linalg.signature(gram))


def adjunction_genus(c_sq: int, kc: int) -> Fraction:
    """Arithmetic genus (C^2 + K.C)/2 + 1."""
    return Fraction(c_sq + kc, 2) + 1


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class IncidencePoint:
    id: str
    branches: tuple[tuple[str, int], ...]
    local: tuple[tuple[tuple[str, str], int], ...] = ()

    @classmethod
    def make(cls, id: str, branches: dict, local: dict | None = None) -> IncidencePoint:
        br = tuple(sorted((k, int(v)) for k, v in branches.items() if v))
        loc = tuple(sorted((_pair(*k), int(v)) for k, v in (local or {}).items() if v))
        return cls(id, br, loc)

    def branch(self, label: str) -> int:
        return dict(self.branches).get(label, 0)

    def local_of(self, a: str, b: str) -> int:
        return dict(self.local).get(_pair(a, b), 0)

    @property
    def curves(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.branches)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "branches": [[k, v] for k, v in self.branches],
            "local": [[a, b, v] for (a, b), v in self.local],
        }

    @classmethod
    def from_json(cls, obj) -> IncidencePoint:
        return cls.make(
            obj["id"],
            {k: v for k, v in obj["branches"]},
            {(a, b): v for a, b, v in obj.get("local", [])},
        )


def transverse_points(labels, gram) -> tuple[IncidencePoint, ...]:
    """One transverse crossing for each unit of every positive off-diagonal entry."""
    pts = []
    for i, a in enumerate(labels):
        for j in range(i + 1, len(labels)):
            b = labels[j]
            n = gram[i][j]
            if n < 0:
                raise OrbisurfError("divlat", f"distinct curves {a}, {b} with negative intersection")
            for k in range(n):
                suffix = f"#{k + 1}" if n > 1 else ""
                pts.append(IncidencePoint.make(f"{a}^{b}{suffix}", {a: 1, b: 1}, {(a, b): 1}))
    return tuple(pts)


@dataclass(frozen=True)
class DivLattice:
    labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    kdeg: tuple[int, ...]
    genus: tuple[int, ...] = ()
    mult: tuple[int, ...] = ()
    points: tuple[IncidencePoint, ...] | None = field(default=None)

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise OrbisurfError("divlat", "curve labels must be unique")
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        if len(gram) != n or not linalg.is_symmetric(gram):
            raise OrbisurfError("divlat", "Gram matrix must be square and symmetric")
        object.__setattr__(self, "gram", gram)
        if len(self.kdeg) != n:
            raise OrbisurfError("divlat", "need one K-degree per curve")
        object.__setattr__(self, "kdeg", tuple(int(x) for x in self.kdeg))
        object.__setattr__(self, "genus", tuple(self.genus) or (0,) * n)
        object.__setattr__(self, "mult", tuple(self.mult) or (0,) * n)
        for i, lab in enumerate(self.labels):
            pa = adjunction_genus(gram[i][i], self.kdeg[i])
            if pa.denominator != 1 or pa < self.genus[i]:
                raise OrbisurfError(
                    "divlat", f"{lab}: C^2={gram[i][i]}, K.C={self.kdeg[i]} is not an irreducible curve class"
                )
        if self.points is not None:
            self._check_points()

    def _check_points(self):
        idx = {lab: i for i, lab in enumerate(self.labels)}
        totals = {}
        for p in self.points:
            for lab in p.curves:
                if lab not in idx:
                    raise OrbisurfError("divlat", f"point {p.id} mentions unknown curve {lab}")
            for (a, b), v in p.local:
                totals[(a, b)] = totals.get((a, b), 0) + v
        for i, a in enumerate(self.labels):
            for j in range(i + 1, len(self.labels)):
                b = self.labels[j]
                if totals.get(_pair(a, b), 0) != self.gram[i][j]:
                    raise OrbisurfError(
                        "divlat", f"incidence model gives {a}.{b}={totals.get(_pair(a, b), 0)}, Gram says {self.gram[i][j]}"
                    )

    @classmethod
    def build(cls, labels, gram, kdeg, genus=None, mult=None, with_points=True) -> DivLattice:
        labels = tuple(labels)
        pts = transverse_points(labels, gram) if with_points else None
        return cls(labels, tuple(map(tuple, gram)), tuple(kdeg), tuple(genus or ()), tuple(mult or ()), pts)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise OrbisurfError("divlat", f"no curve labelled {label!r}") from None

    def dot(self, a: str, b: str) -> int:
        return self.gram[self.index(a)][self.index(b)]

    def sq(self, a: str) -> int:
        return self.dot(a, a)

    def k(self, a: str) -> int:
        return self.kdeg[self.index(a)]

    def pa(self, a: str) -> Fraction:
        return adjunction_genus(self.sq(a), self.k(a))

    def genus_of(self, a: str) -> int:
        return self.genus[self.index(a)]

    def mult_of(self, a: str) -> int:
        return self.mult[self.index(a)]

    @property
    def rank(self) -> int:
        return len(self.labels)

    def sub_gram(self, labels) -> list[list[int]]:
        ids = [self.index(x) for x in labels]
        return [[self.gram[i][j] for j in ids] for i in ids]

    def vec_dot(self, u: dict, v: dict) -> int:
        """Intersection of two integer combinations of curves given as dicts."""
        return sum(a * b * self.dot(x, y) for x, a in u.items() for y, b in v.items())

    def k_dot(self, u: dict) -> int:
        return sum(a * self.k(x) for x, a in u.items())

    def signature(self) -> SignatureReport:
        return signature(self.gram)

    def k_squared(self) -> Fraction:
        """K^2, assuming the curves span Num over Q (so K is a rational combination)."""
        sol = linalg.solve([list(r) for r in self.gram], list(self.kdeg))
        if sol is None:
            raise OrbisurfError("divlat", "K is not in the rational span of the listed curves")
        return sum(x * k for x, k in zip(sol, self.kdeg))

    def with_mult(self, mults: dict) -> DivLattice:
        m = tuple(int(mults.get(lab, self.mult[i])) for i, lab in enumerate(self.labels))
        return replace(self, mult=m)

    def points_on(self, label: str) -> list[IncidencePoint]:
        return [p for p in (self.points or ()) if p.branch(label)]

    def to_json(self) -> dict:
        out = {
            "labels": list(self.labels),
            "gram": [list(r) for r in self.gram],
            "kdeg": list(self.kdeg),
            "genus": list(self.genus),
            "mult": list(self.mult),
        }
        if self.points is not None:
            out["points"] = [p.to_json() for p in self.points]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> DivLattice:
        for key in ("labels", "gram", "kdeg"):
            if key not in obj:
                raise OrbisurfError("divlat", f"lattice JSON lacks {key!r}")
        pts = None
        if "points" in obj:
            pts = tuple(IncidencePoint.from_json(p) for p in obj["points"])
        return cls(
            tuple(obj["labels"]),
            tuple(map(tuple, obj["gram"])),
            tuple(obj["kdeg"]),
            tuple(obj.get("genus", ())),
            tuple(obj.get("mult", ())),
            pts,
        )


def blow_up(L: DivLattice, label: str = "E", through: dict | None = None, at: str | None = None) -> DivLattice:
    """Blow up a point.

    With no ``through`` the point lies on none of the listed curves and E is
    orthogonal to everything. Otherwise ``through`` maps each curve to its
    multiplicity at the point; strict transforms C' = C - m_C E. ``at`` names
    the incidence point being blown up, which must be an ordinary point (each
    pair of branches crossing transversally).
    """
    if label in L.labels:
        raise OrbisurfError("divlat", f"label {label!r} already in use")
    through = {k: int(v) for k, v in (through or {}).items() if v}
    for k in through:
        L.index(k)
    n = L.rank
    m = [through.get(lab, 0) for lab in L.labels]
    gram = [[L.gram[i][j] - m[i] * m[j] for j in range(n)] + [m[i]] for i in range(n)]
    gram.append(m + [-1])
    kdeg = [L.kdeg[i] + m[i] for i in range(n)] + [-1]
    genus = L.genus + (0,)
    mult = L.mult + (0,)

    points = None
    if L.points is not None:
        pts = list(L.points)
        if through:
            if at is None:
                raise OrbisurfError("divlat", "blowing up on curves needs the incidence point")
            target = next((p for p in pts if p.id == at), None)
            if target is None:
                raise OrbisurfError("divlat", f"no incidence point {at!r}")
            for (a, b), v in target.local:
                if v != target.branch(a) * target.branch(b):
                    raise OrbisurfError("divlat", f"point {at} is not an ordinary point")
            if dict(target.branches) != through:
                raise OrbisurfError("divlat", f"multiplicities at {at} do not match the point model")
            pts.remove(target)
        elif at is not None:
            raise OrbisurfError("divlat", "an incidence point was given but no curves through it")
        for lab in sorted(through):
            for k in range(through[lab]):
                suffix = f"#{k + 1}" if through[lab] > 1 else ""
                pts.append(IncidencePoint.make(f"{label}^{lab}{suffix}", {label: 1, lab: 1}, {(label, lab): 1}))
        points = tuple(pts)
    return DivLattice(L.labels + (label,), tuple(map(tuple, gram)), tuple(kdeg), genus, mult, points)


def contract(L: DivLattice, E: str) -> DivLattice:
    """Contract a smooth rational (-1)-curve.

    For the remaining curves: C^2 += (C.E)^2, C.C' += (C.E)(C'.E),
    K.C -= C.E. Every incidence point on E is merged into one image point.
    """
    e = L.index(E)
    if L.gram[e][e] != -1 or L.kdeg[e] != -1 or L.genus[e] != 0:
        raise OrbisurfError("divlat", f"{E} is not an exceptional curve of the first kind")
    keep = [i for i in range(L.rank) if i != e]
    ce = [L.gram[i][e] for i in range(L.rank)]
    gram = tuple(tuple(L.gram[i][j] + ce[i] * ce[j] for j in keep) for i in keep)
    kdeg = tuple(L.kdeg[i] - ce[i] for i in keep)
    labels = tuple(L.labels[i] for i in keep)
    genus = tuple(L.genus[i] for i in keep)
    mult = tuple(L.mult[i] for i in keep)

    points = None
    if L.points is not None:
        on_e = [p for p in L.points if p.branch(E)]
        rest = [p for p in L.points if not p.branch(E)]
        branches: dict[str, int] = {}
        local: dict[tuple[str, str], int] = {}
        for p in on_e:
            for lab, b in p.branches:
                if lab != E:
                    branches[lab] = branches.get(lab, 0) + b
            for (a, b), v in p.local:
                if E not in (a, b):
                    local[(a, b)] = local.get((a, b), 0) + v
        meets = sorted(branches)
        for x in range(len(meets)):
            for y in range(x + 1, len(meets)):
                a, b = meets[x], meets[y]
                local[(a, b)] = local.get((a, b), 0) + L.dot(a, E) * L.dot(b, E)
        if branches:
            rest.append(IncidencePoint.make(f"[{E}]", branches, local))
        points = tuple(rest)
    return DivLattice(labels, gram, kdeg, genus, mult, points)


def zariski_fiber_solver(gram) -> tuple[int, ...]:
    """Fiber multiplicities: the primitive positive kernel vector of a fiber Gram."""
    sig = signature(gram)
    if sig.n_plus != 0 or sig.n_zero != 1:
        raise OrbisurfError(
            "divlat", f"fiber Gram must be negative semidefinite of corank 1, got signature {tuple(sig)}"
        )
    (v,) = linalg.nullspace(gram)
    if all(x <= 0 for x in v):
        v = tuple(-x for x in v)
    if any(x <= 0 for x in v):
        raise OrbisurfError("divlat", f"kernel vector {v} has mixed signs; not a fiber")
    assert all(x == 0 for x in linalg.matvec(gram, v))
    return v
