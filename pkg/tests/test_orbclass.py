import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from orbisurf.characters import RepClass, regular_rep
from orbisurf.cyclotomic import CycloNum
from orbisurf.errors import OrbisurfError
from orbisurf.oracle import (
    equivariant_tangent_oracle,
    ideal_from_partition,
    minimal_generators,
    monomial_ideals,
    partitions,
    quotient_rep,
    staircase,
    verify_cluster_family,
)
from orbisurf.orbclass import (
    ExtClass,
    KClassN,
    OrbChern,
    OrbSurface,
    StackyPoint,
    euler_pairing,
    hilb_dim,
    hilb_dim_via_pairing,
    kclass_of_quotient,
    orb_chern,
    orb_chern_q,
    orb_chern_skyscraper,
    skyscraper_pairing,
)


def surface(r, w, chi_o=None):
    p = StackyPoint("p", r, w)
    return p, OrbSurface((p,), chi_o=chi_o)


def coprime_weights(r):
    units = [u for u in range(r) if gcd(u, r) == 1] if r > 1 else [0]
    return [(a, b) for a in units for b in units]


def test_stacky_point_invariants():
    p = StackyPoint("p", 5, (2, 4))
    assert p.rho_omega.degree == 2
    assert p.rho_k == p.irrep(1)
    with pytest.raises(OrbisurfError):
        StackyPoint("p", 4, (2, 1))


def test_duplicate_labels_rejected():
    p = StackyPoint("p", 2, (1, 1))
    with pytest.raises(OrbisurfError):
        OrbSurface((p, p))


def test_chern_skyscraper_examples():
    p = StackyPoint("p", 2, (1, 1))
    reg = orb_chern_skyscraper(p, regular_rep(p.group))
    assert reg.untwisted == (0, 0, 1)
    assert reg.twisted == ()
    triv = orb_chern_skyscraper(p, p.irrep(0))
    assert triv.sector("p", 1) == 4
    sign = orb_chern_skyscraper(p, p.irrep(1))
    assert sign.untwisted == (0, 0, Fraction(1, 2))
    assert sign.sector("p", 1) == -4


def test_chern_group_mismatch():
    p = StackyPoint("p", 2, (1, 1))
    q = StackyPoint("q", 3, (1, 1))
    with pytest.raises(OrbisurfError):
        orb_chern_skyscraper(p, q.irrep(1))


def test_chern_identity_small():
    for r in range(1, 7):
        for w in coprime_weights(r):
            p = StackyPoint("p", r, w)
            assert orb_chern_skyscraper(p, regular_rep(p.group)) == orb_chern_q()


def test_kclass_of_quotient():
    p = StackyPoint("p", 2, (1, 1))
    G = p.group
    assert kclass_of_quotient(p, regular_rep(G)) == KClassN.make(1, {"p": (0,)})
    assert kclass_of_quotient(p, RepClass(G, (1, 0))) == KClassN.make(1, {"p": (-1,)})
    assert kclass_of_quotient(p, RepClass(G, (1, 2))) == KClassN.make(1, {"p": (1,)})
    with pytest.raises(OrbisurfError):
        kclass_of_quotient(p, RepClass(G, (1, -1)))
    for r in (3, 5, 6):
        q = StackyPoint("p", r, (1, r - 1))
        assert kclass_of_quotient(q, regular_rep(q.group)) == KClassN.make(1, {"p": (0,) * (r - 1)})


def test_kclass_chern_matches_quotient_chern():
    # the lattice class and the quotient have the same Chern character
    p = StackyPoint("p", 3, (1, 2))
    for lam in [(1,), (2, 1), (3,), (2, 2, 1)]:
        I = ideal_from_partition(lam)
        v = quotient_rep(3, (1, 2), I)
        X = OrbSurface((p,))
        assert orb_chern(X, kclass_of_quotient(p, v)) == orb_chern_skyscraper(p, v)


def test_kclass_arith_and_json():
    a = KClassN.make(2, {"p": (1, -1)})
    b = KClassN.make(-1, {"p": (0, 3)})
    assert a + b == KClassN.make(1, {"p": (1, 2)})
    assert a - a == KClassN.make(0, {"p": (0, 0)})
    assert KClassN.from_json(a.to_json()) == a


def test_euler_pairing_table():
    p, X = surface(2, (1, 1))
    ox = ExtClass.make(m=1)
    q = ExtClass.make(n0=1)
    assert euler_pairing(X, ox, q) == 1
    assert euler_pairing(X, q, ox) == 1
    assert euler_pairing(X, q, q) == 0
    s1 = ExtClass.make(sky={"p": (0, 1)})
    assert euler_pairing(X, s1, s1) == 2
    assert skyscraper_pairing(p, 1, 1) == 2
    with pytest.raises(OrbisurfError):
        euler_pairing(X, ox, ox)
    _, Y = surface(2, (1, 1), chi_o=1)
    assert euler_pairing(Y, ox, ox) == 1


def test_points_are_orthogonal():
    p = StackyPoint("p", 3, (1, 1))
    q = StackyPoint("q", 2, (1, 1))
    X = OrbSurface((p, q))
    a = ExtClass.make(sky={"p": (1, 2, 0)})
    b = ExtClass.make(sky={"q": (0, 5)})
    assert euler_pairing(X, a, b) == 0


def ext_classes(X, with_ox):
    def build(vals):
        m, n0, *rest = vals
        sky, k = {}, 0
        for p in X.points:
            sky[p.label] = tuple(rest[k:k + p.r])
            k += p.r
        return ExtClass.make(m if with_ox else 0, n0, sky)

    size = 2 + sum(p.r for p in X.points)
    return st.lists(st.integers(-4, 4), min_size=size, max_size=size).map(build)


MIXED = OrbSurface((StackyPoint("a", 4, (1, 3)), StackyPoint("b", 3, (1, 1))), chi_o=1)


@settings(max_examples=60)
@given(ext_classes(MIXED, True), ext_classes(MIXED, True), ext_classes(MIXED, True), st.integers(-3, 3))
def test_euler_pairing_bilinear(a, b, c, k):
    X = MIXED
    assert euler_pairing(X, a + b, c) == euler_pairing(X, a, c) + euler_pairing(X, b, c)
    assert euler_pairing(X, c, a + b) == euler_pairing(X, c, a) + euler_pairing(X, c, b)
    assert euler_pairing(X, a.scale(k), c) == k * euler_pairing(X, a, c)


@settings(max_examples=60)
@given(ext_classes(MIXED, False), ext_classes(MIXED, False), ext_classes(MIXED, False))
def test_chern_additive(a, b, c):
    assert orb_chern(MIXED, a + b) == orb_chern(MIXED, a) + orb_chern(MIXED, b)


@settings(max_examples=60)
@given(ext_classes(MIXED, False), ext_classes(MIXED, True))
def test_serre_symmetry(a, b):
    assert euler_pairing(MIXED, a, b) == euler_pairing(MIXED, b, a.twist_by_k(MIXED))


def test_reduce_preserves_pairings():
    p, X = surface(3, (1, 2))
    a = ExtClass.make(sky={"p": (2, 1, 0)})
    m, k = a.reduce(X)
    assert m == 0
    b = ExtClass.make(n0=1, sky={"p": (0, 1, 3)})
    assert euler_pairing(X, a, b) == euler_pairing(X, k, b)


def test_hilb_dim_points():
    p, X = surface(3, (1, 1))
    for n in range(11):
        assert hilb_dim(X, KClassN.make(n, {"p": (0, 0)})) == 2 * n


def test_hilb_dim_examples():
    _, X2 = surface(2, (1, 1))
    assert hilb_dim(X2, KClassN.make(1, {"p": (-1,)})) == 0
    assert hilb_dim(X2, KClassN.make(0, {"p": (1,)})) == -2
    _, X3 = surface(3, (1, 1))
    assert hilb_dim(X3, KClassN.make(1, {"p": (-1, -1)})) == 0


@settings(max_examples=80)
@given(
    st.sampled_from([(2, (1, 1)), (3, (1, 1)), (3, (1, 2)), (4, (1, 3)), (5, (2, 3))]),
    st.lists(st.integers(-4, 4), min_size=5, max_size=5),
)
def test_hilb_dim_equals_pairing_expression(pt, vals):
    r, w = pt
    _, X = surface(r, w)
    alpha = KClassN.make(vals[0], {"p": tuple(vals[1:r])})
    assert hilb_dim(X, alpha) == hilb_dim_via_pairing(X, alpha)


def test_hilb_dim_quadratic_form():
    # second differences of hilb_dim give minus the symmetrized Euler form
    p, X = surface(4, (1, 1))
    zero = KClassN.make(0, {"p": (0, 0, 0)})

    def e(i):
        v = [0, 0, 0]
        v[i - 1] = 1
        return KClassN.make(0, {"p": tuple(v)})

    f = lambda a: hilb_dim(X, a)
    for i in range(1, 4):
        for j in range(1, 4):
            second = f(e(i) + e(j)) - f(e(i)) - f(e(j)) + f(zero)
            a, b = e(i).to_ext(), e(j).to_ext()
            assert second == -(euler_pairing(X, a, b) + euler_pairing(X, b, a))


def test_partitions_and_ideals():
    assert [sum(1 for _ in partitions(n)) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]
    I = ideal_from_partition((2, 1))
    assert I == [(0, 2), (1, 1), (2, 0)]
    assert sorted(staircase(I)) == [(0, 0), (0, 1), (1, 0)]
    assert minimal_generators([(1, 0), (2, 0), (0, 1), (1, 1)]) == [(0, 1), (1, 0)]
    with pytest.raises(OrbisurfError):
        staircase([(1, 1)])


def test_oracle_examples():
    assert equivariant_tangent_oracle(2, (1, 1), [(1, 0), (0, 1)]) == 0
    assert equivariant_tangent_oracle(2, (1, 1), [(2, 0), (1, 1), (0, 2)]) == 0
    assert equivariant_tangent_oracle(1, (0, 0), [(1, 0), (0, 1)]) == 2
    # Hilb^n of the plane is smooth of dimension 2n
    for n in range(1, 6):
        for I in monomial_ideals(n):
            assert equivariant_tangent_oracle(1, (0, 0), I) == 2 * n


def test_oracle_detects_short_truncation():
    I = ideal_from_partition((4,))
    with pytest.raises(OrbisurfError):
        equivariant_tangent_oracle(1, (0, 0), I, N=1)


@pytest.mark.parametrize("r,w", [(2, (1, 1)), (3, (1, 1)), (3, (1, 2))])
def test_oracle_agrees_with_formula(r, w):
    p, X = surface(r, w)
    seen = set()
    for n in range(1, 7):
        for I in monomial_ideals(n):
            v = quotient_rep(r, w, I)
            alpha = kclass_of_quotient(p, v)
            assert equivariant_tangent_oracle(r, w, I) == hilb_dim(X, alpha), I
            seen.add(alpha)
    assert len(seen) >= 8


@pytest.mark.parametrize("r", range(1, 8))
def test_cluster_family(r):
    rep = verify_cluster_family(r)
    assert rep["all_regular"]
    assert len(rep["samples"]) == 6


def test_cluster_family_examples():
    rep = verify_cluster_family(2, samples=[(1, 0)])
    assert rep["samples"][0]["quotient"] == [1, 1]
    rep = verify_cluster_family(1, samples=[(1, 1)])
    assert rep["samples"][0]["quotient"] == [1]


def test_orbchern_json():
    p = StackyPoint("p", 3, (1, 2))
    ch = orb_chern_skyscraper(p, p.irrep(1))
    js = ch.to_json()
    assert js["untwisted"][2] == {"num": "1", "den": "3"}
    assert CycloNum.from_json(js["twisted"][0]["value"]) == ch.sector("p", 1)
