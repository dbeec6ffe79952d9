"""Fiber configurations, Euler numbers and Kodaira's classification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .divlat import DivLattice, IncidencePoint, adjunction_genus, signature, zariski_fiber_solver
from .errors import OrbisurfError

NOT_ADE = "not affine ADE"


@dataclass(frozen=True)
class Component:
    label: str
    self_int: int
    kdeg: int
    genus: int = 0
    mult: int = 1

    @property
    def pa(self) -> Fraction:
        return adjunction_genus(self.self_int, self.kdeg)


@dataclass(frozen=True)
class CurveConfig:
    components: tuple[Component, ...] = ()
    points: tuple[IncidencePoint, ...] = ()

    def __post_init__(self):
        labels = self.labels
        if len(set(labels)) != len(labels):
            raise OrbisurfError("kodaira", "component labels must be unique")
        known = set(labels)
        pts = []
        for p in self.points:
            br = {k: v for k, v in p.branches if k in known}
            if not br:
                continue
            loc = {k: v for k, v in p.local if k[0] in known and k[1] in known}
            pts.append(IncidencePoint.make(p.id, br, loc))
        object.__setattr__(self, "points", tuple(sorted(pts, key=lambda q: q.id)))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.components)

    def component(self, label: str) -> Component:
        for c in self.components:
            if c.label == label:
                return c
        raise OrbisurfError("kodaira", f"no component {label!r}")

    def gram(self) -> list[list[int]]:
        labels = self.labels
        idx = {lab: i for i, lab in enumerate(labels)}
        g = [[0] * len(labels) for _ in labels]
        for i, c in enumerate(self.components):
            g[i][i] = c.self_int
        for p in self.points:
            for (a, b), v in p.local:
                g[idx[a]][idx[b]] += v
                g[idx[b]][idx[a]] += v
        return g

    @property
    def mults(self) -> tuple[int, ...]:
        return tuple(c.mult for c in self.components)

    def edges(self) -> list[tuple[str, str, int]]:
        g = self.gram()
        labels = self.labels
        return [
            (labels[i], labels[j], g[i][j])
            for i in range(len(labels))
            for j in range(i + 1, len(labels))
            if g[i][j]
        ]

    def to_json(self) -> dict:
        return {
            "components": [
                {"label": c.label, "self_int": c.self_int, "kdeg": c.kdeg, "genus": c.genus, "mult": c.mult}
                for c in self.components
            ],
            "points": [p.to_json() for p in self.points],
        }

    @classmethod
    def from_json(cls, obj: dict) -> CurveConfig:
        comps = tuple(
            Component(c["label"], int(c["self_int"]), int(c["kdeg"]), int(c.get("genus", 0)), int(c.get("mult", 1)))
            for c in obj.get("components", [])
        )
        if "points" in obj:
            pts = tuple(IncidencePoint.from_json(p) for p in obj["points"])
        else:
            # plain edge list: every unit of intersection is a transverse crossing
            pts = []
            for a, b, n in obj.get("edges", []):
                for k in range(n):
                    pts.append(IncidencePoint.make(f"{a}^{b}#{k + 1}", {a: 1, b: 1}, {(a, b): 1}))
            pts = tuple(pts)
        return cls(comps, pts)


def config_from_lattice(L: DivLattice, labels, mults=None) -> CurveConfig:
    labels = list(labels)
    if mults is None:
        mults = zariski_fiber_solver(L.sub_gram(labels))
    comps = tuple(
        Component(lab, L.sq(lab), L.k(lab), L.genus_of(lab), int(m)) for lab, m in zip(labels, mults)
    )
    cfg = CurveConfig(comps, tuple(L.points or ()))
    if L.points is not None and cfg.gram() != L.sub_gram(labels):
        raise OrbisurfError("kodaira", "incidence model disagrees with the lattice")
    return cfg


@dataclass(frozen=True)
class FiberType:
    """Kodaira symbol. ``kind`` is one of I, I*, II, III, IV, II*, III*, IV*."""

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("I", "I*", "II", "III", "IV", "II*", "III*", "IV*"):
            raise OrbisurfError("kodaira", f"unknown Kodaira symbol {self.kind!r}")
        if self.n < 0 or (self.n and self.kind not in ("I", "I*")):
            raise OrbisurfError("kodaira", f"bad index {self.n} for {self.kind}")

    @property
    def name(self) -> str:
        if self.kind == "I":
            return f"I{self.n}"
        if self.kind == "I*":
            return f"I{self.n}*"
        return self.kind

    @property
    def euler(self) -> int:
        fixed = {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}
        if self.kind == "I":
            return self.n
        if self.kind == "I*":
            return self.n + 6
        return fixed[self.kind]

    @property
    def dynkin(self) -> str | None:
        if self.kind == "I":
            return f"A~{self.n - 1}" if self.n else None
        table = {"II": "A~0", "III": "A~1", "IV": "A~2", "IV*": "E~6", "III*": "E~7", "II*": "E~8"}
        if self.kind == "I*":
            return f"D~{self.n + 4}"
        return table[self.kind]

    def __str__(self):
        return self.name

    @classmethod
    def parse(cls, name: str) -> FiberType:
        star = name.endswith("*")
        body = name[:-1] if star else name
        if body in ("II", "III", "IV"):
            return cls(body + ("*" if star else ""))
        if body.startswith("I") and body[1:].isdigit():
            return cls("I*" if star else "I", int(body[1:]))
        raise OrbisurfError("kodaira", f"cannot parse Kodaira symbol {name!r}")


def euler_number(c: CurveConfig) -> int:
    """Topological Euler number of the union of the components."""
    total = sum(2 - 2 * comp.genus for comp in c.components)
    for p in c.points:
        total -= sum(b for _, b in p.branches) - 1
    return total


def _graph_from_gram(gram) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(len(gram)))
    for i in range(len(gram)):
        for j in range(i + 1, len(gram)):
            for _ in range(gram[i][j]):
                g.add_edge(i, j)
    return g


def dynkin_recognize(gram) -> str:
    """Affine ADE label of a connected configuration of (-2)-curves."""
    n = len(gram)
    if n == 0 or any(gram[i][i] != -2 for i in range(n)):
        return NOT_ADE
    if any(gram[i][j] < 0 for i in range(n) for j in range(n) if i != j):
        return NOT_ADE
    g = _graph_from_gram(gram)
    if not nx.is_connected(g):
        return NOT_ADE
    sig = signature(gram)
    if (sig.n_plus, sig.n_zero) != (0, 1):
        return NOT_ADE
    if n == 2:
        return "A~1" if gram[0][1] == 2 else NOT_ADE
    if any(gram[i][j] > 1 for i in range(n) for j in range(n) if i != j):
        return NOT_ADE
    simple = nx.Graph(g)
    deg = dict(simple.degree())
    if all(d == 2 for d in deg.values()):
        return f"A~{n - 1}"
    if not nx.is_tree(simple):
        return NOT_ADE
    branch = [v for v, d in deg.items() if d >= 3]
    if len(branch) == 1 and deg[branch[0]] == 4:
        return "D~4" if n == 5 else NOT_ADE
    if len(branch) == 2 and all(deg[v] == 3 for v in branch):
        return f"D~{n - 1}"
    if len(branch) == 1 and deg[branch[0]] == 3:
        center = branch[0]
        arms = []
        for nb in simple.neighbors(center):
            length, prev, cur = 1, center, nb
            while deg[cur] == 2:
                nxt = next(v for v in simple.neighbors(cur) if v != prev)
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        arms = tuple(sorted(arms))
        return {(2, 2, 2): "E~6", (1, 3, 3): "E~7", (1, 2, 5): "E~8"}.get(arms, NOT_ADE)
    return NOT_ADE


def classify(c: CurveConfig) -> FiberType:
    """Kodaira type of a full fiber of an elliptic fibration."""
    if not c.components:
        raise OrbisurfError("kodaira", "empty configuration")
    gram = c.gram()
    expected = zariski_fiber_solver(gram)
    if tuple(c.mults) != expected:
        raise OrbisurfError("kodaira", f"multiplicities {c.mults} are not the fiber kernel {expected}")
    if sum(comp.mult * comp.kdeg for comp in c.components) != 0:
        raise OrbisurfError("kodaira", "K.fiber must vanish for an elliptic fiber")
    n = len(c.components)

    if n == 1:
        comp = c.components[0]
        if comp.genus == 1:
            return FiberType("I", 0)
        if comp.genus == 0 and comp.pa == 1:
            br = [p.branch(comp.label) for p in c.points]
            if 2 in br:
                return FiberType("I", 1)
            if all(b <= 1 for b in br):
                return FiberType("II")
        raise OrbisurfError("kodaira", "irreducible fiber is neither smooth, nodal nor cuspidal")

    if any(comp.genus for comp in c.components):
        raise OrbisurfError("kodaira", "reducible fiber with an irrational component")
    if any(comp.self_int != -2 for comp in c.components):
        raise OrbisurfError("kodaira", "fiber contains a (-1)-curve or worse; not relatively minimal")

    shared = [p for p in c.points if len(p.branches) >= 2]
    if n == 2 and gram[0][1] == 2:
        if len(shared) == 1 and shared[0].local_of(*c.labels) == 2:
            return FiberType("III")
        if len(shared) == 2:
            return FiberType("I", 2)
        raise OrbisurfError("kodaira", "two-component fiber with unexpected contact")
    if n == 3 and all(gram[i][j] == 1 for i in range(3) for j in range(3) if i != j):
        if any(len(p.branches) == 3 for p in shared):
            return FiberType("IV")
        return FiberType("I", 3)

    label = dynkin_recognize(gram)
    if label.startswith("A~"):
        return FiberType("I", n)
    if label.startswith("D~"):
        return FiberType("I*", int(label[2:]) - 4)
    star = {"E~6": "IV*", "E~7": "III*", "E~8": "II*"}
    if label in star:
        return FiberType(star[label])
    raise OrbisurfError("kodaira", "configuration matches no Kodaira fiber type")


def _minus(n: int) -> str:
    return f"−{-n}" if n < 0 else str(n)


def emit_dot(c: CurveConfig, name: str = "fiber") -> str:
    lines = [f"graph {name} {{"]
    if c.components:
        lines.append("  node [shape=circle];")
    for comp in c.components:
        mult = f"{comp.mult}·" if comp.mult != 1 else ""
        lines.append(f'  "{comp.label}" [label="{mult}{comp.label} ({_minus(comp.self_int)})"];')
    for p in c.points:
        labs = [k for k, _ in p.branches]
        for x in range(len(labs)):
            for y in range(x + 1, len(labs)):
                v = p.local_of(labs[x], labs[y])
                if v:
                    attr = f' [label="{v}"]' if v > 1 else ""
                    lines.append(f'  "{labs[x]}" -- "{labs[y]}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"
