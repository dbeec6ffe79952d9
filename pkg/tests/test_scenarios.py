import copy
import time

import pytest

from orbisurf.divlat import zariski_fiber_solver
from orbisurf.errors import OrbisurfError
from orbisurf.hjres import hj_chain, normalize_fixed_point
from orbisurf.scenarios import (
    CASES,
    CaseId,
    boundary_components,
    build_case,
    case_dot,
    compare_table1,
    fixed_point_weights,
    get_case,
    load_table1,
    run_case,
)

NAMES = ["D4", "E6", "E7", "E8"]


@pytest.fixture(scope="module")
def reports():
    return {n: run_case(n) for n in NAMES}


def test_case_ids():
    assert [CASES[n].i for n in NAMES] == [2, 3, 4, 6]
    assert [CASES[n].s for n in NAMES] == [4, 3, 3, 3]
    assert get_case(CASES["E6"]) is CASES["E6"]
    with pytest.raises(OrbisurfError):
        get_case("E9")
    with pytest.raises(OrbisurfError):
        CaseId("bad", 4, (3, 3, 3))
    with pytest.raises(OrbisurfError):
        CaseId("bad", 2, (2, 2, 2))


def test_fixed_point_singularities():
    # weights 1/m(1, m-1) over the zero section and 1/m(1, 1) over infinity
    for n in NAMES:
        c = CASES[n]
        for m in c.orders:
            zero = normalize_fixed_point(m, fixed_point_weights(c.i, m, "zero"))
            inf = normalize_fixed_point(m, fixed_point_weights(c.i, m, "inf"))
            assert zero.a == m - 1 and inf.a == 1
            assert hj_chain(zero).self_ints == (-2,) * (m - 1)
            assert hj_chain(inf).self_ints == (-m,)


def test_lattices_are_hyperbolic():
    for n in NAMES:
        model = build_case(n)
        sig = model.lattice.signature()
        assert sig.n_plus == 1
        assert sig.rank == 10 - model.lattice.k_squared()


def test_section_self_intersections(reports):
    for n, rep in reports.items():
        curves = {c["label"]: c["self_int"] for c in rep["curves"]}
        assert curves["D_0"] == -2
        assert curves["D_inf"] == (-2 if n == "D4" else -1)
        for j in range(1, CASES[n].s + 1):
            assert curves[f"D_{j}"] == -1


def test_ruling_fibers(reports):
    for rep in reports.values():
        for f in rep["ruling_fibers"]:
            mult = {c["label"]: c["mult"] for c in f["components"]}
            assert mult[f"D_{f['point']}"] == f["order"]
            # a ruling fiber is a tree of rational curves
            assert f["euler"] == len(f["components"]) + 1


def test_fibers_over_zero(reports):
    expected = {"D4": "I0*", "E6": "IV*", "E7": "III*", "E8": "II*"}
    for n, rep in reports.items():
        assert rep["fiber_0"]["type"] == expected[n]


def test_fiber_multiplicities_are_zariski(reports):
    for rep in reports.values():
        for side in ("fiber_0", "fiber_inf"):
            f = rep[side]
            labels = [c["label"] for c in f["components"]]
            idx = {lab: i for i, lab in enumerate(labels)}
            g = [[0] * len(labels) for _ in labels]
            for c in f["components"]:
                g[idx[c["label"]]][idx[c["label"]]] = c["self_int"]
            for a, b, v in f["edges"]:
                g[idx[a]][idx[b]] = g[idx[b]][idx[a]] = v
            assert zariski_fiber_solver(g) == tuple(c["mult"] for c in f["components"])


def test_relatively_minimal(reports):
    counts = {"D4": 0, "E6": 1, "E7": 2, "E8": 3}
    final = {"D4": "I0*", "E6": "IV", "E7": "III", "E8": "II"}
    for n, rep in reports.items():
        rm = rep["relatively_minimal"]
        assert rm["count"] == counts[n]
        assert rm["fiber"]["type"] == final[n]


def test_hirzebruch(reports):
    expected = {"D4": 8, "E6": 9, "E7": 10, "E8": 11}
    for n, rep in reports.items():
        h = rep["hirzebruch"]
        assert h["count"] == expected[n]
        assert h["d0_self_int"] == -2
        assert h["k_squared"] == 8


def test_euler_ledger(reports):
    for rep in reports.values():
        led = rep["euler_ledger"]
        assert led["ruling"] == led["elliptic"]
        assert led["relatively_minimal_elliptic"] == 12
        for stage in led["elliptic_stages"] + led["ruling_stages"]:
            assert stage["euler"] == stage["expected"] == stage["noether"]
            assert stage["signature"]["n_plus"] == 1


def test_boundary_counts():
    assert [boundary_components(n) for n in NAMES] == [5, 4, 4, 4]


def test_table1_diff_empty(reports):
    for rep in reports.values():
        assert compare_table1(rep) == []


def test_table1_diff_detects_changes(reports):
    rep = copy.deepcopy(reports["E6"])
    rep["fiber_0"]["components"][0]["self_int"] = -3
    rep["relatively_minimal"]["count"] = 2
    diff = compare_table1(rep)
    items = {d["item"] for d in diff}
    assert len(diff) == 2
    assert any("fiber_0" in i for i in items)
    assert any("relatively_minimal" in i for i in items)


def test_fixture_file():
    fx = load_table1()
    assert sorted(fx) == NAMES
    assert fx["E6"]["fiber_inf"]["components"]["F_1"] == [1, -3]


def test_runtime():
    t = time.perf_counter()
    for n in NAMES:
        compare_table1(run_case(n))
    assert time.perf_counter() - t < 2.0


def test_dot_deterministic():
    for n in NAMES:
        a = case_dot(n)
        assert a == case_dot(n)
        assert a.count("graph ") >= 2
