from fractions import Fraction
from math import gcd

import pytest

from orbisurf.errors import OrbisurfError
from orbisurf.hjres import (
    SMOOTH,
    X_AXIS,
    Y_AXIS,
    SingType,
    continued_fraction,
    hj_chain,
    normalize_fixed_point,
)

CITED = {
    (2, 1): [-2],
    (3, 2): [-2, -2],
    (3, 1): [-3],
    (4, 3): [-2, -2, -2],
    (4, 1): [-4],
    (6, 5): [-2] * 5,
    (6, 1): [-6],
}


@pytest.mark.parametrize("ra,chain", CITED.items())
def test_cited_chains(ra, chain):
    assert list(hj_chain(SingType(*ra)).self_ints) == chain


def test_toric_orientation():
    # 1/5(1,2): 5/2 = 3 - 1/2, and the x-axis meets the (-3) end
    c = hj_chain(SingType(5, 2))
    assert c.self_ints == (-3, -2)
    assert c.first_meets == X_AXIS and c.last_meets == Y_AXIS


def all_types(limit):
    for r in range(2, limit + 1):
        for a in range(1, r):
            if gcd(a, r) == 1:
                yield r, a


def test_roundtrip_duality_and_a_type():
    for r, a in all_types(50):
        c = hj_chain(SingType(r, a))
        assert all(s <= -2 for s in c.self_ints)
        assert continued_fraction([-s for s in c.self_ints]) == Fraction(r, a)
        dual = hj_chain(SingType(r, pow(a, -1, r)))
        assert c.reversed().self_ints == dual.self_ints
        if a == r - 1:
            assert c.self_ints == (-2,) * (r - 1)


def test_gram_of_chain():
    assert hj_chain(SingType(3, 2)).gram() == [[-2, 1], [1, -2]]


def test_normalize_fixed_point():
    assert normalize_fixed_point(4, (1, 3)) == SingType(4, 3)
    assert normalize_fixed_point(4, (1, 1)) == SingType(4, 1)
    assert normalize_fixed_point(4, (3, 1)) == SingType(4, 3)
    assert normalize_fixed_point(1, (0, 0)) == SMOOTH
    assert hj_chain(SMOOTH).self_ints == ()


def test_swapping_weights_is_the_inverse_type():
    for r, a in all_types(20):
        t = normalize_fixed_point(r, (1, a))
        s = normalize_fixed_point(r, (a, 1))
        assert s == t.swapped
        assert s.canonical() == t.canonical()
    # mu_2 with equal weights does not bifurcate
    assert normalize_fixed_point(2, (1, 1)).canonical() == SingType(2, 1)


def test_rejections():
    with pytest.raises(OrbisurfError):
        normalize_fixed_point(4, (2, 1))
    with pytest.raises(OrbisurfError):
        normalize_fixed_point(4, (1, 2))
    with pytest.raises(OrbisurfError):
        SingType(6, 2)
    with pytest.raises(OrbisurfError):
        SingType(0, 0)
    assert str(SingType(6, 5)) == "1/6(1,5)"
