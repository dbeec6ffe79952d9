"""The four rational elliptic surfaces with C^*-action.

Each case is the quotient of E x P^1 by mu_i (E an elliptic curve with an
order-i automorphism), resolved minimally. The base orbifold curve E/mu_i is
P^1 with stacky points of orders ``orders``. Two fibrations live on the
resolution: the ruling over E/mu_i (fibers over the stacky points are
reducible) and the elliptic fibration over P^1, whose only singular fibers
lie over 0 and infinity.

Curves on the resolution:
  D_0, D_inf   strict transforms of the zero and infinity sections
  D_j          strict transform of the fiber over the j-th stacky point
  E_j.k        chain resolving the point of D_j on the zero section
  F_j (F_j.k)  chain resolving the point of D_j on the infinity section
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

import networkx as nx

from . import linalg
from .divlat import DivLattice, contract, signature, zariski_fiber_solver
from .errors import OrbisurfError
from .hjres import hj_chain, normalize_fixed_point
from .kodaira import CurveConfig, FiberType, classify, config_from_lattice, emit_dot, euler_number

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CaseId:
    name: str
    i: int
    orders: tuple[int, ...]

    def __post_init__(self):
        if any(self.i % a for a in self.orders):
            raise OrbisurfError("scenarios", f"stabilizer orders {self.orders} must divide {self.i}")
        if sum(1 - Fraction(1, a) for a in self.orders) != 2:
            raise OrbisurfError("scenarios", f"orders {self.orders} do not give a Calabi-Yau orbifold curve")

    @property
    def s(self) -> int:
        return len(self.orders)


CASES = {
    "D4": CaseId("D4", 2, (2, 2, 2, 2)),
    "E6": CaseId("E6", 3, (3, 3, 3)),
    "E7": CaseId("E7", 4, (4, 4, 2)),
    "E8": CaseId("E8", 6, (6, 3, 2)),
}


def get_case(name) -> CaseId:
    if isinstance(name, CaseId):
        return name
    try:
        return CASES[name]
    except KeyError:
        raise OrbisurfError("scenarios", f"unknown case {name!r}; choose from {sorted(CASES)}") from None


def fixed_point_weights(i: int, m: int, side: str) -> tuple[int, int]:
    """Weights (base, fiber) of the stabilizer generator at a fixed point.

    The generator zeta_i^(i/m) of the order-m stabilizer scales the base
    coordinate by zeta_m. The fiber coordinate scales by zeta_i^-1 near the
    zero section and by zeta_i near the infinity section.
    """
    step = i // m
    sign = -1 if side == "zero" else 1
    fiber = (sign * step) % i // step
    return 1, fiber % m


@dataclass
class SurfaceModel:
    case: CaseId
    lattice: DivLattice
    ruling: dict[int, list[str]]
    fiber0: list[str]
    fiberinf: list[str]
    singularities: list[dict] = field(default_factory=list)


def _solve_fiber(gram_known, coupling, mult):
    """Multiplicities n with G n = -mult * coupling (fiber orthogonal to its parts)."""
    sol = linalg.solve(gram_known, [-mult * c for c in coupling])
    if sol is None:
        raise OrbisurfError("scenarios", "fiber equations are inconsistent")
    return sol


def build_case(case) -> SurfaceModel:
    case = get_case(case)
    i = case.i
    labels = ["D_0", "D_inf"]
    self_int: dict[str, int | None] = {"D_0": None, "D_inf": None}
    edges: list[tuple[str, str]] = []
    ruling: dict[int, list[str]] = {}
    fiber0, fiberinf = ["D_0"], ["D_inf"]
    sing = []
    for j, m in enumerate(case.orders, start=1):
        t0 = normalize_fixed_point(m, fixed_point_weights(i, m, "zero"))
        tinf = normalize_fixed_point(m, fixed_point_weights(i, m, "infinity"))
        c0, cinf = hj_chain(t0), hj_chain(tinf)
        sing.append(
            {
                "point": j,
                "order": m,
                "zero_section": str(t0),
                "zero_chain": list(c0.self_ints),
                "infinity_section": str(tinf),
                "infinity_chain": list(cinf.self_ints),
            }
        )
        dj = f"D_{j}"
        es = [f"E_{j}.{k}" for k in range(1, c0.length + 1)]
        fs = [f"F_{j}"] if cinf.length == 1 else [f"F_{j}.{k}" for k in range(1, cinf.length + 1)]
        for lab, b in zip(es, c0.self_ints):
            self_int[lab] = b
        for lab, b in zip(fs, cinf.self_ints):
            self_int[lab] = b
        self_int[dj] = None
        labels += es + [dj] + fs
        # the section meets the b_1 end of each chain, the fiber D_j the far end
        chain0 = ["D_0"] + es + [dj]
        chaininf = ["D_inf"] + fs + [dj]
        edges += list(zip(chain0, chain0[1:])) + list(zip(chaininf, chaininf[1:]))
        ruling[j] = es + [dj] + fs
        fiber0 += es
        fiberinf += fs

    n = len(labels)
    idx = {lab: k for k, lab in enumerate(labels)}
    gram = [[0] * n for _ in range(n)]
    for a, b in edges:
        gram[idx[a]][idx[b]] += 1
        gram[idx[b]][idx[a]] += 1
    kdeg: dict[str, Fraction] = {}
    for lab, b in self_int.items():
        if b is not None:
            gram[idx[lab]][idx[lab]] = b
            kdeg[lab] = Fraction(-2 - b)

    def solve_unknown(lead: str, mult: int, others: list[str], k_fiber: int):
        g = [[gram[idx[a]][idx[b]] for b in others] for a in others]
        coupling = [gram[idx[lead]][idx[a]] for a in others]
        ns = _solve_fiber(g, coupling, mult)
        sq = -sum(x * c for x, c in zip(ns, coupling)) / mult
        kd = (k_fiber - sum(x * kdeg[a] for x, a in zip(ns, others))) / mult
        return sq, kd

    solved = {}
    for j, m in enumerate(case.orders, start=1):
        dj = f"D_{j}"
        solved[dj] = solve_unknown(dj, m, [c for c in ruling[j] if c != dj], -2)
    solved["D_0"] = solve_unknown("D_0", i, fiber0[1:], 0)
    solved["D_inf"] = solve_unknown("D_inf", i, fiberinf[1:], 0)
    for lab, (sq, kd) in solved.items():
        if sq.denominator != 1 or kd.denominator != 1:
            raise OrbisurfError("scenarios", f"{lab}: non-integral solution C^2={sq}, K.C={kd}")
        if sq + kd != -2:
            raise OrbisurfError("scenarios", f"{lab} does not solve to a smooth rational curve")
        gram[idx[lab]][idx[lab]] = int(sq)
        kdeg[lab] = kd

    L = DivLattice.build(labels, gram, [int(kdeg[lab]) for lab in labels])
    model = SurfaceModel(case, L, ruling, fiber0, fiberinf, sing)
    _check_fibrations(model)
    return model


def _fiber_class(L: DivLattice, comps) -> dict:
    return dict(zip(comps, zariski_fiber_solver(L.sub_gram(comps))))


def _check_fibrations(model: SurfaceModel):
    L = model.lattice
    for j, comps in model.ruling.items():
        phi = _fiber_class(L, comps)
        if L.k_dot(phi) != -2:
            raise OrbisurfError("scenarios", f"ruling fiber {j} has K-degree {L.k_dot(phi)}")
        for sec in ("D_0", "D_inf"):
            if L.vec_dot(phi, {sec: 1}) != 1:
                raise OrbisurfError("scenarios", f"{sec} is not a section of the ruling at point {j}")
    for comps in (model.fiber0, model.fiberinf):
        if L.k_dot(_fiber_class(L, comps)) != 0:
            raise OrbisurfError("scenarios", "elliptic fiber has nonzero K-degree")


def _fiber_json(cfg: CurveConfig, ftype: FiberType | None) -> dict:
    return {
        "components": [{"label": c.label, "mult": c.mult, "self_int": c.self_int} for c in cfg.components],
        "edges": [[a, b, v] for a, b, v in cfg.edges()],
        "type": ftype.name if ftype else None,
        "dynkin": ftype.dynkin if ftype else None,
        "euler": euler_number(cfg),
    }


def _is_relatively_minimal(cfg: CurveConfig) -> bool:
    return not any(c.self_int == -1 and c.kdeg == -1 and c.genus == 0 for c in cfg.components)


def fibers_and_types(model: SurfaceModel) -> dict:
    L = model.lattice
    out = {"ruling": {}}
    for j, comps in model.ruling.items():
        out["ruling"][j] = config_from_lattice(L, comps)
    for key, comps in (("fiber_0", model.fiber0), ("fiber_inf", model.fiberinf)):
        cfg = config_from_lattice(L, comps)
        out[key] = (cfg, classify(cfg) if _is_relatively_minimal(cfg) else None)
    return out


def _hodge(L: DivLattice) -> dict:
    sig = signature(L.gram)
    if sig.n_plus != 1:
        raise OrbisurfError("scenarios", f"Hodge index violated: signature {tuple(sig)}")
    return {"n_plus": sig.n_plus, "n_minus": sig.n_minus, "n_zero": sig.n_zero}


def _k_squared(L: DivLattice) -> int:
    ksq = L.k_squared()
    assert ksq.denominator == 1
    return int(ksq)


def ruling_euler(L: DivLattice, ruling: dict) -> int:
    return 4 + sum(euler_number(config_from_lattice(L, comps)) - 2 for comps in ruling.values())


def elliptic_euler(L: DivLattice, fiber0, fiberinf) -> int:
    return euler_number(config_from_lattice(L, fiber0)) + euler_number(config_from_lattice(L, fiberinf))


def _stage(k, label, fibration, value, initial, L) -> dict:
    ksq = _k_squared(L)
    sig = _hodge(L)
    entry = {
        "stage": k,
        "contracted": label,
        "fibration": fibration,
        "euler": value,
        "expected": initial - k,
        "noether": 12 - ksq,
        "k_squared": ksq,
        "rank": sig["n_plus"] + sig["n_minus"],
        "signature": sig,
    }
    if not value == initial - k == 12 - ksq:
        raise OrbisurfError("scenarios", f"Euler ledger mismatch at stage {k}: {entry}")
    return entry


def relative_minimal_model(model: SurfaceModel) -> dict:
    """Contract (-1)-curves in the fiber over infinity until none remain."""
    L = model.lattice
    fiber = list(model.fiberinf)
    initial = elliptic_euler(L, model.fiber0, fiber)
    log = []
    stages = [_stage(0, None, "elliptic", initial, initial, L)]
    while True:
        cands = [c for c in fiber if L.sq(c) == -1 and L.k(c) == -1 and L.genus_of(c) == 0]
        if not cands:
            break
        if len(log) >= model.lattice.rank:
            raise OrbisurfError("scenarios", "contraction loop does not terminate")
        E = cands[0]
        L = contract(L, E)
        fiber.remove(E)
        log.append(E)
        stages.append(_stage(len(log), E, "elliptic", elliptic_euler(L, model.fiber0, fiber), initial, L))
    cfg = config_from_lattice(L, fiber)
    return {"contractions": log, "final": cfg, "type": classify(cfg), "stages": stages, "lattice": L}


def hirzebruch_reduction(model: SurfaceModel) -> dict:
    """Contract vertical (-1)-curves of the ruling until every fiber is irreducible."""
    L = model.lattice
    ruling = {j: list(c) for j, c in model.ruling.items()}
    initial = ruling_euler(L, ruling)
    log = []
    stages = [_stage(0, None, "ruling", initial, initial, L)]
    while any(len(c) > 1 for c in ruling.values()):
        cands = [
            (L.dot(c, "D_0") != 0, j, pos, c)
            for j, comps in ruling.items()
            if len(comps) > 1
            for pos, c in enumerate(comps)
            if L.sq(c) == -1 and L.k(c) == -1 and L.genus_of(c) == 0
        ]
        if not cands:
            raise OrbisurfError("scenarios", "ruling has a reducible fiber without (-1)-curves")
        _, j, _, E = min(cands)
        L = contract(L, E)
        ruling[j].remove(E)
        log.append(E)
        stages.append(_stage(len(log), E, "ruling", ruling_euler(L, ruling), initial, L))
    survivors = [comps[0] for comps in ruling.values()]
    d0 = L.sq("D_0")
    ksq = _k_squared(L)
    grams = {tuple(map(tuple, L.sub_gram(["D_0", f]))) for f in survivors}
    target = ((-2, 1), (1, 0))
    if d0 != -2 or ksq != 8 or grams != {target}:
        raise OrbisurfError(
            "scenarios", f"reduction did not reach the second Hirzebruch surface: D_0^2={d0}, K^2={ksq}, {grams}"
        )
    return {
        "contractions": log,
        "count": len(log),
        "survivors": survivors,
        "d0_self_int": d0,
        "k_squared": ksq,
        "final_gram": [list(r) for r in target],
        "stages": stages,
    }


def euler_ledger(model: SurfaceModel, rmm: dict | None = None, hirz: dict | None = None) -> dict:
    L = model.lattice
    ruling = ruling_euler(L, model.ruling)
    elliptic = elliptic_euler(L, model.fiber0, model.fiberinf)
    if ruling != elliptic:
        raise OrbisurfError("scenarios", f"ruling gives e={ruling}, elliptic fibers give e={elliptic}")
    rmm = rmm or relative_minimal_model(model)
    hirz = hirz or hirzebruch_reduction(model)
    minimal = rmm["stages"][-1]["euler"]
    return {
        "ruling": ruling,
        "elliptic": elliptic,
        "relatively_minimal_elliptic": minimal,
        "elliptic_stages": rmm["stages"],
        "ruling_stages": hirz["stages"],
    }


def boundary_components(case) -> int:
    return get_case(case).s + 1


def run_case(case) -> dict:
    """Full pipeline for one case as a JSON-ready report."""
    case = get_case(case)
    model = build_case(case)
    fibers = fibers_and_types(model)
    rmm = relative_minimal_model(model)
    hirz = hirzebruch_reduction(model)
    ledger = euler_ledger(model, rmm, hirz)
    L = model.lattice
    ruling = []
    for j, cfg in fibers["ruling"].items():
        item = _fiber_json(cfg, None)
        del item["type"], item["dynkin"]
        ruling.append({"point": j, "order": case.orders[j - 1], **item})
    return {
        "schema_version": SCHEMA_VERSION,
        "case": case.name,
        "i": case.i,
        "orders": list(case.orders),
        "singularities": model.singularities,
        "curves": [
            {"label": lab, "self_int": L.sq(lab), "kdeg": L.k(lab)} for lab in L.labels
        ],
        "signature": _hodge(L),
        "k_squared": _k_squared(L),
        "ruling_fibers": ruling,
        "fiber_0": _fiber_json(*fibers["fiber_0"]),
        "fiber_inf": _fiber_json(*fibers["fiber_inf"]),
        "relatively_minimal": {
            "contractions": rmm["contractions"],
            "count": len(rmm["contractions"]),
            "fiber": _fiber_json(rmm["final"], rmm["type"]),
        },
        "hirzebruch": {k: v for k, v in hirz.items() if k != "stages"},
        "euler_ledger": ledger,
        "boundary_components": boundary_components(case),
    }


def load_table1() -> dict:
    with resources.files("orbisurf").joinpath("data/table1.json").open() as fh:
        return json.load(fh)


def _fixture_graph(fx: dict) -> nx.Graph:
    g = nx.Graph()
    for lab, (mult, sq) in fx["components"].items():
        g.add_node(lab, mult=mult, self_int=sq)
    for a, b, *rest in fx["edges"]:
        g.add_edge(a, b, n=rest[0] if rest else 1)
    return g


def _report_graph(item: dict) -> nx.Graph:
    g = nx.Graph()
    for c in item["components"]:
        g.add_node(c["label"], mult=c["mult"], self_int=c["self_int"])
    for a, b, n in item["edges"]:
        g.add_edge(a, b, n=n)
    return g


def _same_graph(g1: nx.Graph, g2: nx.Graph) -> bool:
    return nx.is_isomorphic(
        g1,
        g2,
        node_match=lambda x, y: (x["mult"], x["self_int"]) == (y["mult"], y["self_int"]),
        edge_match=lambda x, y: x["n"] == y["n"],
    )


def _describe(g: nx.Graph) -> dict:
    return {
        "components": sorted([g.nodes[v]["mult"], g.nodes[v]["self_int"]] for v in g.nodes),
        "edges": g.number_of_edges(),
    }


def compare_table1(report: dict, fixtures: dict | None = None) -> list[dict]:
    """Differences between a case report and the embedded table; empty means agreement."""
    fixtures = fixtures if fixtures is not None else load_table1()
    case = report["case"]
    if case not in fixtures:
        raise OrbisurfError("scenarios", f"no fixture for case {case!r}")
    fx = fixtures[case]
    diff = []

    def check(item, expected, computed):
        if expected != computed:
            diff.append({"case": case, "item": item, "expected": expected, "computed": computed})

    for key in ("fiber_0", "fiber_inf"):
        g_fx, g_rep = _fixture_graph(fx[key]), _report_graph(report[key])
        if not _same_graph(g_fx, g_rep):
            diff.append(
                {"case": case, "item": f"{key}.graph", "expected": _describe(g_fx), "computed": _describe(g_rep)}
            )
        if "type" in fx[key]:
            check(f"{key}.type", [fx[key]["type"], fx[key]["dynkin"]], [report[key]["type"], report[key]["dynkin"]])
    rm = fx["relatively_minimal"]
    rep_rm = report["relatively_minimal"]
    check("relatively_minimal.contractions", rm["contractions"], rep_rm["count"])
    check("relatively_minimal.type", [rm["type"], rm["dynkin"]], [rep_rm["fiber"]["type"], rep_rm["fiber"]["dynkin"]])
    return diff


def case_dot(case) -> str:
    """DOT graphs of the fibers over 0 and infinity and of the minimal fiber over infinity."""
    case = get_case(case)
    model = build_case(case)
    fibers = fibers_and_types(model)
    rmm = relative_minimal_model(model)
    parts = [
        emit_dot(fibers["fiber_0"][0], f"{case.name}_fiber_0"),
        emit_dot(fibers["fiber_inf"][0], f"{case.name}_fiber_inf"),
        emit_dot(rmm["final"], f"{case.name}_fiber_inf_minimal"),
    ]
    for j, cfg in fibers["ruling"].items():
        parts.append(emit_dot(cfg, f"{case.name}_ruling_{j}"))
    return "".join(parts)
