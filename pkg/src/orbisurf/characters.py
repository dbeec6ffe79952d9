"""Character tables of finite groups, with cyclic groups built in.

Characters are class functions indexed by group elements (not conjugacy
classes). For mu_r the element g^k is column k and the irreducible rho_j has
chi_j(g^k) = zeta_r^{jk}. Other small groups can be supplied as explicit
tables; they are validated by first orthogonality on construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycloNum
from .errors import OrbisurfError


@dataclass(frozen=True, eq=False)
class GroupData:
    order: int
    labels: tuple[str, ...]
    table: tuple[tuple[CycloNum, ...], ...]
    cyclic: bool = False

    def __post_init__(self):
        if len(self.labels) != self.order:
            raise OrbisurfError("cyclochar", "need one label per group element")
        if any(len(row) != self.order for row in self.table):
            raise OrbisurfError("cyclochar", "character rows must have one value per element")
        if any(v != 1 for v in self.table[0]):
            raise OrbisurfError("cyclochar", "row 0 must be the trivial character")
        for i, a in enumerate(self.table):
            for j, b in enumerate(self.table):
                if inner_product(self, a, b) != int(i == j):
                    raise OrbisurfError(
                        "cyclochar", f"rows {i} and {j} violate first orthogonality"
                    )
        if sum(d * d for d in self.degrees) != self.order:
            raise OrbisurfError("cyclochar", "irreducible degrees do not square-sum to |G|")

    @property
    def n_irreps(self) -> int:
        return len(self.table)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(row[0].to_rational()) for row in self.table)

    def character(self, i: int) -> tuple[CycloNum, ...]:
        return self.table[i]

    def __eq__(self, other):
        return isinstance(other, GroupData) and (
            self.order,
            self.labels,
            self.table,
        ) == (other.order, other.labels, other.table)

    def __hash__(self):
        return hash((self.order, self.labels))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "labels": list(self.labels),
            "table": [[v.to_json() for v in row] for row in self.table],
        }

    @classmethod
    def from_json(cls, obj: dict) -> GroupData:
        table = tuple(tuple(CycloNum.from_json(v) for v in row) for row in obj["table"])
        return cls(int(obj["order"]), tuple(obj["labels"]), table)


@lru_cache(maxsize=None)
def char_table_cyclic(r: int) -> GroupData:
    """Character table of mu_r: chi_j(g^k) = zeta_r^(jk)."""
    if r < 1:
        raise OrbisurfError("cyclochar", f"group order must be positive, got {r}")
    labels = tuple(f"g^{k}" for k in range(r))
    table = tuple(tuple(CycloNum.zeta(r, j * k) for k in range(r)) for j in range(r))
    return GroupData(r, labels, table, cyclic=True)


def inner_product(group: GroupData, a, b) -> Fraction:
    """(1/|G|) sum_g a(g) conj(b(g)), asserted rational."""
    if len(a) != group.order or len(b) != group.order:
        raise OrbisurfError("cyclochar", "class functions must have length |G|")
    total = CycloNum(1)
    for x, y in zip(a, b):
        total = total + x * y.conj()
    total = total / group.order
    if not total.is_rational:
        raise OrbisurfError("cyclochar", "non-rational inner product: corrupted character table")
    return total.to_rational()


@dataclass(frozen=True)
class RepClass:
    """Virtual representation as integer multiplicities over the irreducibles."""

    group: GroupData = field(repr=False)
    mults: tuple[int, ...]

    def __post_init__(self):
        if len(self.mults) != self.group.n_irreps:
            raise OrbisurfError(
                "cyclochar",
                f"expected {self.group.n_irreps} multiplicities, got {len(self.mults)}",
            )
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))

    @classmethod
    def irrep(cls, group: GroupData, i: int) -> RepClass:
        mults = [0] * group.n_irreps
        mults[i % group.n_irreps if group.cyclic else i] = 1
        return cls(group, tuple(mults))

    @property
    def degree(self) -> int:
        return sum(m * d for m, d in zip(self.mults, self.group.degrees))

    @property
    def is_genuine(self) -> bool:
        return all(m >= 0 for m in self.mults)

    def character(self) -> tuple[CycloNum, ...]:
        out = []
        for k in range(self.group.order):
            v = CycloNum(1)
            for m, row in zip(self.mults, self.group.table):
                if m:
                    v = v + row[k] * m
            out.append(v)
        return tuple(out)

    def _check(self, other: RepClass):
        if self.group != other.group:
            raise OrbisurfError("cyclochar", "representations live over different groups")

    def __add__(self, other: RepClass) -> RepClass:
        self._check(other)
        return RepClass(self.group, tuple(a + b for a, b in zip(self.mults, other.mults)))

    def __sub__(self, other: RepClass) -> RepClass:
        self._check(other)
        return RepClass(self.group, tuple(a - b for a, b in zip(self.mults, other.mults)))

    def __neg__(self) -> RepClass:
        return RepClass(self.group, tuple(-a for a in self.mults))

    def __rmul__(self, n: int) -> RepClass:
        return RepClass(self.group, tuple(n * a for a in self.mults))


def decompose(group: GroupData, chi) -> RepClass:
    """Multiplicities of each irreducible in a (virtual) character."""
    mults = []
    for row in group.table:
        m = inner_product(group, chi, row)
        if m.denominator != 1:
            raise OrbisurfError("cyclochar", "class function is not a virtual character")
        mults.append(int(m))
    return RepClass(group, tuple(mults))


def tensor(a: RepClass, b: RepClass) -> RepClass:
    a._check(b)
    if a.group.cyclic:
        # Irreducibles of mu_r multiply by adding indices mod r.
        r = a.group.order
        out = [0] * r
        for i, x in enumerate(a.mults):
            if x:
                for j, y in enumerate(b.mults):
                    if y:
                        out[(i + j) % r] += x * y
        return RepClass(a.group, tuple(out))
    prod = tuple(x * y for x, y in zip(a.character(), b.character()))
    return decompose(a.group, prod)


def tensor_via_characters(a: RepClass, b: RepClass) -> RepClass:
    """Tensor product computed by pointwise character product and decomposition."""
    a._check(b)
    prod = tuple(x * y for x, y in zip(a.character(), b.character()))
    return decompose(a.group, prod)


def regular_rep(group: GroupData) -> RepClass:
    rep = RepClass(group, group.degrees)
    chi = rep.character()
    if chi[0] != group.order or any(v for v in chi[1:]):
        raise OrbisurfError("cyclochar", "regular character check failed")
    return rep


def dual(a: RepClass) -> RepClass:
    if a.group.cyclic:
        r = a.group.order
        out = [0] * r
        for i, m in enumerate(a.mults):
            out[(-i) % r] += m
        return RepClass(a.group, tuple(out))
    return decompose(a.group, tuple(v.conj() for v in a.character()))
