import pytest
from hypothesis import given, settings, strategies as st

from skewgqc import (SkewRing, gcld, gcrd, is_right_divisor, lclm, left_divide, parse_poly,
                     render_poly, right_divide, right_divide_recurrence, enumerate_right_divisors)
from skewgqc.errors import DivisionError, GcrdUndefinedError, ParseError
from skewgqc.skew_poly import is_left_divisor, lclm_many, xgcrd

from conftest import F3, F4, RINGS, polys

T, T2 = 2, 3  # codes of t and t^2 in F_4


def test_twisted_monomial_product(f4):
    tx = f4.monomial(T, 1)
    assert tx * tx == f4.monomial(1, 2)


def test_x4_minus_1_factorization(f4):
    P = f4.parse
    assert P("x^2+x+t^2") * P("x^2+x+t") == f4.xn_minus_1(4)
    assert tuple(right_divide(f4.xn_minus_1(4), P("x^2+x+t"))) == (P("x^2+x+t^2"), f4.zero)
    assert tuple(left_divide(f4.xn_minus_1(4), P("x^2+x+t^2"))) == (P("x^2+x+t"), f4.zero)


def test_identity_cases(f4):
    f = f4.parse("x^3+t*x+1")
    assert f4.one * f == f == f * f4.one
    assert tuple(right_divide(f, f)) == (f4.one, f4.zero)
    assert tuple(left_divide(f, f4.one)) == (f, f4.zero)


def test_division_small_cases(f4):
    P = f4.parse
    assert tuple(right_divide(P("x^3"), P("x-1"))) == (P("x^2+x+1"), f4.one)
    q, r = left_divide(P("x^2"), P("x-t"))
    assert P("x-t") * q + r == P("x^2") and r.deg < 1


def test_divide_by_zero(f4):
    with pytest.raises(DivisionError):
        right_divide(f4.x, f4.zero)


def test_gcrd_examples(f4):
    P = f4.parse
    f = P("t*x^2+x")
    assert gcrd(f, f4.zero) == f.monic()
    assert gcrd(P("x^2+x+t"), P("x^2+x+t^2")) == f4.one
    assert gcrd(f4.xn_minus_1(4), P("x^2+x+t")) == P("x^2+x+t")
    # no common monic linear right divisor, by brute force
    common = [d for d in enumerate_right_divisors(4, 1, f4)
              if is_right_divisor(d, P("x^2+x+t")) and is_right_divisor(d, P("x^2+x+t^2"))]
    assert common == []


def test_lclm_examples(f4):
    P = f4.parse
    assert lclm(P("x^2+1"), P("x^3+1")) == P("x^4+x^3+x+1")
    f = P("t*x^2+1")
    assert lclm(f, f) == f.monic()
    R3 = SkewRing.over(F3, "Fq", 0)
    assert lclm(R3.parse("x-1"), R3.parse("x+1")) == R3.parse("x^2-1")


def test_lclm_over_s_example1(s4):
    P = s4.parse
    assert lclm(P("x^2+1"), P("x^3+1")) == P("x^4+x^3+x+1")
    assert is_right_divisor(P("x^2+1"), s4.xn_minus_1(4))


def test_gcrd_non_unit_lead_needs_crt(s4):
    from skewgqc.skew_poly import _gcrd_direct
    a, b = s4.parse("v*x+1"), s4.parse("x+v")
    with pytest.raises(GcrdUndefinedError):
        _gcrd_direct(a, b)
    g = gcrd(a, b)
    g1, g2 = s4.split(g)
    a1, a2 = s4.split(a)
    b1, b2 = s4.split(b)
    assert g1 == gcrd(a1, b1) and g2 == gcrd(a2, b2)


def test_right_divisor_linear_cross_check(f4):
    target = f4.parse("x^2-1")
    for c in range(1, 4):
        d = f4.poly([c, 1])
        by_product = any(f4.poly([a, 1]) * d == target for a in range(4))
        assert is_right_divisor(d, target) == by_product


def test_enumerate_right_divisors(f4):
    R3 = SkewRing.over(F3, "Fq", 0)
    assert set(enumerate_right_divisors(2, 1, R3)) == {R3.parse("x-1"), R3.parse("x+1")}
    assert enumerate_right_divisors(5, 0, f4) == [f4.one]
    found = {str(d) for d in enumerate_right_divisors(4, 2, f4)}
    assert {"x^2+x+t", "x^2+x+t^2", "x^2+t*x+t", "x^2+t^2*x+t", "x^2+1"} <= found
    brute = {str(d) for d in polys_of_degree(f4, 2) if is_right_divisor(d, f4.xn_minus_1(4))}
    assert found == brute


def polys_of_degree(ring, k):
    import itertools
    size = ring.field.q
    for tail in itertools.product(range(size), repeat=k):
        yield ring.poly(list(tail) + [1])


# -- properties ---------------------------------------------------------------------

DIVISION_CASES = 1000


@pytest.mark.parametrize("name", ["F4", "F9", "S4"])
def test_right_division_reconstruction(name):
    ring = RINGS[name]

    @settings(max_examples=DIVISION_CASES)
    @given(polys(ring, 8), polys(ring, 5, unit_lead=True))
    def check(a, b):
        q, r = right_divide(a, b)
        assert q * b + r == a
        assert r.deg < b.deg
        assert right_divide_recurrence(a, b) == right_divide(a, b)

    check()


@pytest.mark.parametrize("name", ["F4", "F9", "S4"])
def test_left_division_reconstruction(name):
    ring = RINGS[name]

    @settings(max_examples=DIVISION_CASES)
    @given(polys(ring, 8), polys(ring, 5, unit_lead=True))
    def check(a, b):
        q, r = left_divide(a, b)
        assert b * q + r == a
        assert r.deg < b.deg

    check()


@pytest.mark.parametrize("name", ["F4", "F9", "S4"])
def test_twist_and_ring_laws(name):
    ring = RINGS[name]

    @settings(max_examples=200)
    @given(polys(ring, 4), polys(ring, 4), polys(ring, 4), st.integers(0, ring_size(ring) - 1))
    def check(f, g, h, c):
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h
        assert ring.x * ring.const(c) == ring.const(ring.theta(c, 1)) * ring.x

    check()


def ring_size(ring):
    return ring.field.q ** 2 if ring.is_s else ring.field.q


def test_noncommutative_witness(f4, s4):
    assert f4.x * f4.const(T) != f4.const(T) * f4.x
    assert s4.x * s4.const(T) != s4.const(T) * s4.x
    R3 = SkewRing.over(F3, "Fq", 0)
    assert R3.x * R3.const(2) == R3.const(2) * R3.x


@pytest.mark.parametrize("name", ["F4", "F9"])
def test_gcrd_lclm_degree_identity(name):
    ring = RINGS[name]

    @settings(max_examples=1000)
    @given(polys(ring, 5, nonzero=True), polys(ring, 5, nonzero=True))
    def check(a, b):
        g, m = gcrd(a, b), lclm(a, b)
        assert g.deg + m.deg == a.deg + b.deg
        assert g.is_monic() and m.is_monic()
        assert is_right_divisor(g, a) and is_right_divisor(g, b)
        assert is_right_divisor(a, m) and is_right_divisor(b, m)
        e = xgcrd(a, b)
        assert e.u * a + e.w * b == e.gcd

    check()


@settings(max_examples=200)
@given(polys(RINGS["F4"], 5, nonzero=True), polys(RINGS["F4"], 5, nonzero=True))
def test_gcld_divides_on_the_left(a, b):
    g = gcld(a, b)
    assert is_left_divisor(g, a) and is_left_divisor(g, b)


def test_lclm_many_is_common_multiple(f4):
    ps = [f4.parse(s) for s in ("x+1", "x^2+x+t", "x^2+t*x+1")]
    m = lclm_many(ps)
    assert all(is_right_divisor(p, m) for p in ps)


# -- parsing --------------------------------------------------------------------------

def test_parse_examples(f4):
    assert parse_poly("x^2 + x + t", f4).coeffs == (T, 1, 1)
    assert parse_poly("0", f4).is_zero()
    assert parse_poly("t x^2", f4) == parse_poly("t*x^2", f4)
    assert parse_poly("(x+1)^2", f4) == parse_poly("x^2+1", f4)


def test_parse_table_polynomial_over_f3_plus_vf3():
    S3 = SkewRing.over(F3, "S", 0)
    f = parse_poly("((2)+v*(2)) + 2*x + ((1)+v*(1))*x^2 + x^3", S3)
    coef = S3.coef
    assert f.coeffs == (coef.code(2, 2), 2, coef.code(1, 1), 1)
    assert parse_poly("(2*v+2)+2*x+(v+1)*x^2+x^3", S3) == f


@pytest.mark.parametrize("text,pos", [("x^", 2), ("x+*1", 2), ("3*x", 0), ("x)", 1), ("x^-1", 2)])
def test_parse_errors_report_position(f4, text, pos):
    with pytest.raises(ParseError) as exc:
        parse_poly(text, f4)
    assert exc.value.position == pos
    assert f"position {pos}" in str(exc.value)


def test_v_rejected_over_field(f4):
    with pytest.raises(ParseError):
        parse_poly("v*x", f4)


@pytest.mark.parametrize("name", ["F4", "F9", "S4"])
def test_render_parse_round_trip(name):
    ring = RINGS[name]

    @settings(max_examples=300)
    @given(polys(ring, 6))
    def check(f):
        assert parse_poly(render_poly(f), ring) == f

    check()
