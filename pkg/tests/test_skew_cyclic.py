import itertools

import numpy as np
import pytest

from skewgqc import (SkewRing, build_skew_cyclic, combine_crt_codes, count_skew_cyclic, factor_xn_minus_1,
                     is_idempotent, make_idempotent_generator, sigma, verify_closure)
from skewgqc.analysis import span_code
from skewgqc.errors import BudgetExceededError, DivisorError, HypothesisError
from skewgqc.skew_cyclic import count_skew_cyclic_oracle, split_crt_code
from skewgqc.skew_poly import enumerate_right_divisors

from conftest import F3, F4, F9

T, T2 = 2, 3


def test_sigma_examples(f4):
    assert sigma([0, 0, 0], f4).tolist() == [0, 0, 0]
    assert sigma([1, T], f4).tolist() == [T2, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sigma_order_exhaustive(f4, n):
    m = np.lcm(n, f4.order)
    for word in itertools.product(range(4), repeat=n):
        w = np.array(word)
        out = w
        for _ in range(m):
            out = sigma(out, f4)
        assert np.array_equal(out, w)


def test_trivial_codes(f4, s4):
    for ring in (f4, s4):
        zero = build_skew_cyclic(4, ring.xn_minus_1(4))
        full = build_skew_cyclic(4, ring.one)
        width = 8 if ring.is_s else 4
        assert zero.gray_code().k == 0
        assert full.gray_code().k == width


def test_repetition_code_n3(f4):
    c = build_skew_cyclic(3, f4.parse("x^2+x+1"))
    g = c.gray_code()
    assert g.k == 1 and g.generator.tolist() == [[1, 1, 1]]
    assert g.min_distance() == 3


def test_non_divisor_rejected(f4):
    with pytest.raises(DivisorError) as exc:
        build_skew_cyclic(3, f4.parse("x+t"))
    assert not exc.value.remainder.is_zero()


def test_combine_same_component(f4):
    g = f4.parse("x^2+x+t")
    c = build_skew_cyclic(4, g)
    both = combine_crt_codes(c, c)
    assert both.gen == both.ring.embed(g)


def test_combine_n1_example():
    R = SkewRing.over(F4, "Fq", 1)
    c = combine_crt_codes(build_skew_cyclic(1, R.one), build_skew_cyclic(1, R.parse("x-1")))
    S = c.ring.coef
    # the S-span of (1 - v) is (1 - v)F_q: Gray images (a, 0)
    words = {tuple(S.gray(np.array([S.from_crt(a, 0)]))) for a in range(4)}
    g = c.gray_code()
    assert g.k == 1
    assert all(g.contains(np.array(w)) for w in words)
    assert c.gray_code() == combine_crt_codes(*split_crt_code(c)).gray_code()


def test_closure_of_all_small_codes(f4, s4):
    for ring in (f4, s4):
        comp = ring.component_ring() if ring.is_s else ring
        for k in range(5):
            for g in enumerate_right_divisors(4, k, comp):
                code = build_skew_cyclic(4, ring.embed(g) if ring.is_s else g)
                assert verify_closure(code)


# Oracle values computed by count_skew_cyclic_oracle and frozen.
FROZEN_COUNTS = [
    # (p, d, ring, t, n, count)
    (3, 1, "S", 0, 1, 4),
    (3, 1, "S", 0, 2, 16),
    (2, 2, "S", 1, 3, 16),
    (2, 2, "S", 0, 3, 64),
    (2, 2, "Fq", 1, 5, 4),
    (3, 2, "Fq", 0, 4, 16),
    (2, 1, "S", 0, 7, 64),
    (2, 3, "Fq", 1, 5, 4),
]


@pytest.mark.parametrize("p,d,kind,t,n,count", FROZEN_COUNTS)
def test_frozen_counts(p, d, kind, t, n, count):
    from skewgqc import FieldSpec
    ring = SkewRing.over(FieldSpec(p, d), kind, t)
    assert count_skew_cyclic(n, ring) == count
    assert count_skew_cyclic_oracle(n, ring) == count


def test_count_refuses_when_gcd_not_one(s4):
    with pytest.raises(HypothesisError, match="gcd"):
        count_skew_cyclic(2, s4)


def test_oracle_budget(s4):
    with pytest.raises(BudgetExceededError):
        count_skew_cyclic_oracle(12, s4)


def test_factorization_exponents():
    assert factor_xn_minus_1(3, F4) == [1, 1, 1]
    assert factor_xn_minus_1(3, F4, 1) == [1, 1]
    assert factor_xn_minus_1(4, F3) == [1, 1, 1]
    assert factor_xn_minus_1(6, F3) == [3, 3]


def test_explicit_exponents(s4):
    assert count_skew_cyclic(3, s4, exponents=[1, 1, 1]) == 64


def generated_code(e, n):
    """Gray image of the left submodule generated by e."""
    ring = e.ring
    words = [e.shift(j).mod_xn(n) for j in range(n)]
    if ring.is_s:
        words += [w.scale_left(ring.coef.v) for w in words]
    width = 2 * n if ring.is_s else n
    return span_code([ring.coef.gray(np.asarray(w.to_vector(n))) for w in words], ring.field, width)


@pytest.mark.parametrize("n,text", [(3, "x^2+x+1"), (5, "x^4+x^3+x^2+x+1"), (7, "x^4+x^2+x+1")])
def test_idempotent_examples(f4, n, text):
    g = f4.parse(text)
    assert is_idempotent(g, n)
    code = build_skew_cyclic(n, g)
    e = make_idempotent_generator(code)
    assert is_idempotent(e, n)
    assert generated_code(e, n) == code.gray_code()


def test_idempotent_of_full_space(f4):
    assert make_idempotent_generator(build_skew_cyclic(3, f4.one)) == f4.one


def test_is_idempotent_brute_force():
    R = SkewRing.over(F3, "Fq", 0)
    assert is_idempotent(R.one, 4)
    assert not is_idempotent(R.x, 2)
    # x^2 = 1 mod x^2 - 1; brute force over all residues
    found = [c for c in itertools.product(range(3), repeat=2)
             if is_idempotent(R.poly(c), 2)]
    assert sorted(found) == [(0, 0), (1, 0), (2, 1), (2, 2)]


@pytest.mark.parametrize("ring_name", ["F4", "S4"])
def test_idempotents_for_every_divisor(ring_name):
    from conftest import RINGS
    ring = RINGS[ring_name]
    comp = ring.component_ring() if ring.is_s else ring
    n = 5
    divs = [g for k in range(n + 1) for g in enumerate_right_divisors(n, k, comp)]
    pairs = itertools.product(divs, divs) if ring.is_s else ((g,) for g in divs)
    for gs in pairs:
        g = ring.join(*gs) if ring.is_s else gs[0]
        code = build_skew_cyclic(n, g)
        e = make_idempotent_generator(code)
        assert is_idempotent(e, n)
        assert generated_code(e, n) == code.gray_code()


def test_idempotent_needs_coprime_length(f4):
    with pytest.raises(HypothesisError):
        make_idempotent_generator(build_skew_cyclic(4, f4.parse("x^2+1")))
