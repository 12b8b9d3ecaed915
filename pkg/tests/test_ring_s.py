import itertools

import numpy as np
import pytest

from skewgqc import FieldElement, SElement, SRing, Automorphism, crt_join, crt_split, gray, lee_weight
from skewgqc.errors import NonUnitError
from skewgqc.ring_s import lee_distance, lee_weight_vec, s_inv, theta_s

from conftest import F3, F4, F9


def s(F, a, b=0):
    return SElement(FieldElement(F, a), FieldElement(F, b))


def test_v_is_idempotent():
    v = SElement.v(F4)
    assert v * v == v
    assert (1 - v) * v == s(F4, 0)


def test_one_plus_v_squared_over_f3():
    x = s(F3, 1, 1)
    assert x * x == s(F3, 1, 0)


def test_gray_examples():
    assert gray([s(F4, 0)] * 3) == [FieldElement(F4, 0)] * 6
    assert [e.code for e in gray([SElement.v(F4)])] == [0, 1]
    assert [e.code for e in gray([s(F3, 1, 2)])] == [1, 0]


def test_lee_weights():
    assert lee_weight(s(F4, 0)) == 0
    assert lee_weight(SElement.v(F4)) == 1
    assert lee_weight(s(F4, 1)) == 2


def test_theta_on_s():
    th = Automorphism(F4, 1)
    t, t2 = F4.primitive, F4.power(F4.primitive, 2)
    assert theta_s(SElement.v(F4), th) == SElement.v(F4)
    assert theta_s(s(F4, t, t2), th) == s(F4, t2, t)


def test_crt_split_join():
    v = SElement.v(F3)
    assert tuple(c.code for c in crt_split(v)) == (0, 1)
    assert crt_join(FieldElement(F3, 1), FieldElement(F3, 2)) == s(F3, 1, 1)
    f = FieldElement(F3, 2)
    assert crt_join(f, f) == s(F3, 2, 0)


def test_non_unit_inverse_names_component():
    with pytest.raises(NonUnitError, match=r"\(1-v\)"):
        s_inv(SElement.v(F3))
    with pytest.raises(NonUnitError, match="v CRT"):
        s_inv(1 - SElement.v(F3))


def test_units_exhaustive_f3():
    for a, b in itertools.product(range(3), repeat=2):
        x = s(F3, a, b)
        c1, c2 = x.crt
        if c1.code and c2.code:
            assert x * s_inv(x) == s(F3, 1)
        else:
            assert not x.is_unit()
            assert all(x * s(F3, c, e) != s(F3, 1) for c, e in itertools.product(range(3), repeat=2))


@pytest.mark.parametrize("F", [F3, F4, F9])
def test_multiplication_is_componentwise_in_crt_form(F):
    R = SRing(F)
    codes = np.arange(F.q ** 2)
    x, y = np.meshgrid(codes, codes)
    prod = R.vmul(x.ravel(), y.ravel())
    a1, a2 = crt_split(x.ravel(), R)
    b1, b2 = crt_split(y.ravel(), R)
    p1, p2 = crt_split(prod, R)
    assert np.array_equal(p1, F.mul_table[a1, b1])
    assert np.array_equal(p2, F.mul_table[a2, b2])
    assert np.array_equal(crt_join(a1, a2, R), x.ravel())


@pytest.mark.parametrize("F", [F3, F4, F9])
def test_gray_isometry_exhaustive(F):
    """Gray map is a linear bijection carrying Lee distance to Hamming distance."""
    elems = [s(F, a, b) for a, b in itertools.product(range(F.q), repeat=2)]
    images = {tuple(c.code for c in gray([x])) for x in elems}
    assert len(images) == F.q ** 2
    for x, y in itertools.product(elems, repeat=2):
        gx, gy = gray([x]), gray([y])
        assert gray([x + y]) == [a + b for a, b in zip(gx, gy)]
        assert lee_distance(x, y) == sum(a != b for a, b in zip(gx, gy))
    for c in range(F.q):
        for x in elems:
            assert gray([FieldElement(F, c) * x]) == [FieldElement(F, c) * a for a in gray([x])]


@pytest.mark.parametrize("F", [F3, F4, F9])
def test_vector_gray_round_trip(F):
    R = SRing(F)
    rng = np.random.default_rng(5)
    for _ in range(200):
        w = rng.integers(0, F.q ** 2, size=5)
        g = R.gray(w)
        assert np.array_equal(R.from_gray(g), w)
        elems = [SElement.from_code(R, int(c)) for c in w]
        assert [e.code for e in gray(elems)] == g.tolist()
        assert lee_weight_vec(elems) == int(np.count_nonzero(g))
