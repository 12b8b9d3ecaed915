"""Skew cyclic codes: left submodules of R[x; theta]/(x^n - 1).

Codes are compared through their Gray images (row spaces over F_q), never
through generator polynomials, which are not unique.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .analysis import LinearCodeFq, span_code
from .errors import (BudgetExceededError, ConstructionError, DivisorError, HypothesisError,
                     SpecMismatchError)
from .ring_s import FqRing
from .skew_poly import SkewPoly, SkewRing, enumerate_right_divisors, right_divide, xgcrd


def sigma(word, ring: SkewRing) -> np.ndarray:
    """theta-twisted cyclic shift (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))."""
    w = np.asarray(word, dtype=np.int64)
    return ring.coef.vfrob(np.roll(w, 1), ring.t)


def poly_vector(p: SkewPoly, n: int) -> np.ndarray:
    return np.asarray(p.to_vector(n), dtype=np.int64)


def vector_poly(vec, ring: SkewRing) -> SkewPoly:
    return ring.poly(int(c) for c in vec)


def _divides_xn(g: SkewPoly, n: int):
    """(is right divisor, complement, remainder), using CRT when g is not monic over S."""
    ring = g.ring
    target = ring.xn_minus_1(n)
    if g.is_zero():
        # 0 = x^n - 1 in R_n: the zero code
        return True, ring.one, ring.zero
    if ring.coef.is_unit(g.lead):
        q, r = right_divide(target, g)
        return r.is_zero(), q, r
    if not ring.is_s:
        raise ConstructionError("generator has a zero leading coefficient")
    g1, g2 = ring.split(g)
    res = [_divides_xn(gi, n) for gi in (g1, g2)]
    ok = res[0][0] and res[1][0]
    return ok, ring.join(res[0][1], res[1][1]), ring.join(res[0][2], res[1][2])


@dataclass(frozen=True)
class SkewCyclicCode:
    n: int
    gen: SkewPoly
    complement: SkewPoly

    @property
    def ring(self) -> SkewRing:
        return self.gen.ring

    @property
    def field(self):
        return self.ring.field

    def components(self):
        """Component generators over F_q (the code itself when already over F_q)."""
        return self.ring.split(self.gen)

    @property
    def dimension(self) -> int:
        """n - deg g over F_q; over S the Gray dimension (n - deg g1) + (n - deg g2)."""
        if not self.ring.is_s:
            return self.n - self.gen.deg
        g1, g2 = self.components()
        return (self.n - g1.deg) + (self.n - g2.deg)

    def generator_matrix(self) -> np.ndarray:
        """Rows x^j g mod (x^n - 1) for j < n - deg g (over S: the larger component degree)."""
        if self.ring.is_s:
            g1, g2 = self.components()
            rows = self.n - min(g1.deg, g2.deg)
        else:
            rows = self.n - self.gen.deg
        return np.array([poly_vector(self.gen.shift(j), self.n) for j in range(rows)],
                        dtype=np.int64).reshape(rows, self.n)

    def spanning_vectors(self):
        """Ring vectors whose F_q-span is the whole left submodule."""
        ring, out = self.ring, []
        for j in range(self.n):
            out.append(poly_vector(self.gen.shift(j), self.n))
            if ring.is_s:
                out.append(poly_vector(self.gen.shift(j).scale_left(ring.coef.v), self.n))
        return out

    def gray_code(self, convention: str | None = None) -> LinearCodeFq:
        return self._gray

    @cached_property
    def _gray(self) -> LinearCodeFq:
        coef = self.ring.coef
        width = 2 * self.n if self.ring.is_s else self.n
        return span_code([coef.gray(v) for v in self.spanning_vectors()], self.field, width)

    def shift(self, vec) -> np.ndarray:
        return sigma(vec, self.ring)

    def contains(self, vec) -> bool:
        return self._gray.contains(self.ring.coef.gray(np.asarray(vec, dtype=np.int64)))

    def same_code(self, other: "SkewCyclicCode") -> bool:
        return self.gray_code() == other.gray_code()


def build_skew_cyclic(n: int, g: SkewPoly) -> SkewCyclicCode:
    """The code <g> in R[x; theta]/(x^n - 1); g must right-divide x^n - 1."""
    if g.is_zero():
        raise ConstructionError("generator must be nonzero")
    if g.ring.coef.is_unit(g.lead) and not g.is_monic():
        g = g.monic()
    ok, comp, rem = _divides_xn(g, n)
    if not ok:
        raise DivisorError(f"{g} does not right-divide x^{n}-1 (remainder {rem})", remainder=rem)
    return SkewCyclicCode(n, g, comp)


def combine_crt_codes(c1: SkewCyclicCode, c2: SkewCyclicCode) -> SkewCyclicCode:
    """(1 - v)C1 + vC2 over S, generated by (1 - v)g1 + v g2."""
    if c1.n != c2.n:
        raise SpecMismatchError(f"lengths differ: {c1.n} vs {c2.n}")
    if c1.ring != c2.ring or c1.ring.is_s:
        raise SpecMismatchError("component codes must share one ring over F_q")
    sring = c1.ring.s_ring()
    gen = sring.join(c1.gen, c2.gen)
    comp = sring.join(c1.complement, c2.complement)
    return SkewCyclicCode(c1.n, gen, comp)


def split_crt_code(c: SkewCyclicCode):
    g1, g2 = c.components()
    return build_skew_cyclic(c.n, g1), build_skew_cyclic(c.n, g2)


# -- counting -----------------------------------------------------------------------

def fixed_subfield(ring: SkewRing) -> list:
    """Codes of the elements of F_q fixed by theta_t (a subfield of size p^gcd(d, t))."""
    F = ring.field
    return [a for a in range(F.q) if F.frob(a, ring.t) == a]


def factor_xn_minus_1(n: int, field, t: int = 0) -> list:
    """Multiplicities s_j of the irreducible factors of x^n - 1 over the fixed field of theta_t.

    With gcd(n, m_t) = 1 every right divisor of x^n - 1 in F_q[x; theta_t]
    has coefficients fixed by theta, so the irreducible factorization in
    the skew ring is the commutative one over that subfield (t = 0 gives
    plain F_q[x]).  Repeatedly strips the smallest-degree monic divisor,
    which is irreducible.  Sorted descending.
    """
    ring = SkewRing(FqRing(field), 0)
    coeffs = fixed_subfield(SkewRing(FqRing(field), t))
    rest = ring.xn_minus_1(n)
    mult = {}
    while rest.deg > 0:
        factor = None
        for k in range(1, rest.deg // 2 + 1):
            for tail in itertools.product(coeffs, repeat=k):
                cand = ring.poly(tuple(reversed(tail)) + (1,))
                if right_divide(rest, cand, check=False).remainder.is_zero():
                    factor = cand
                    break
            if factor is not None:
                break
        if factor is None:
            factor = rest.monic()
        count = 0
        while rest.deg > 0:
            q, r = right_divide(rest, factor, check=False)
            if not r.is_zero():
                break
            rest = q
            count += 1
        mult[factor.coeffs] = count
    return sorted(mult.values(), reverse=True)


def check_counting_hypothesis(n: int, ring: SkewRing):
    m = ring.order
    if math.gcd(n, m) != 1:
        raise HypothesisError(
            f"counting formula needs gcd(n, m_t) = 1, but gcd({n}, {m}) = {math.gcd(n, m)}")


def count_skew_cyclic(n: int, ring: SkewRing, exponents=None) -> int:
    """prod(s_j + 1) skew cyclic codes over F_q, squared over S."""
    check_counting_hypothesis(n, ring)
    if exponents is None:
        exponents = factor_xn_minus_1(n, ring.field, ring.t)
    per = math.prod(s + 1 for s in exponents)
    return per * per if ring.is_s else per


def count_skew_cyclic_oracle(n: int, ring: SkewRing, bound: int = 10 ** 5) -> int:
    """Distinct left submodules of R_n generated by monic right divisors, by enumeration.

    Over S every pair of component divisors is joined and the resulting
    S-codes are compared as Gray row spaces.
    """
    comp = ring.component_ring() if ring.is_s else ring
    cost = sum(ring.field.q ** k for k in range(n + 1))
    if cost > bound:
        raise BudgetExceededError(f"oracle needs {cost} candidates", required=cost, budget=bound)
    divisors = []
    for k in range(n + 1):
        divisors += enumerate_right_divisors(n, k, comp, bound)
    if ring.is_s:
        sring = ring if ring.is_s else ring.s_ring()
        gens = [sring.join(a, b) for a, b in itertools.product(divisors, divisors)]
    else:
        gens = divisors
    seen = set()
    for g in gens:
        ok, compl, _ = _divides_xn(g, n)
        assert ok
        seen.add(SkewCyclicCode(n, g, compl).gray_code().key())
    return len(seen)


# -- idempotents -------------------------------------------------------------------

def is_idempotent(p: SkewPoly, n: int) -> bool:
    return (p * p).mod_xn(n) == p.mod_xn(n)


def _idempotent_component(code: SkewCyclicCode, search_bound: int) -> SkewPoly:
    n, g, ring = code.n, code.gen, code.ring
    if g.deg == 0:
        return ring.one
    h = code.complement
    target = code.gray_code()
    res = xgcrd(g, h)
    if res.gcd.deg == 0:
        c = ring.coef.inv(res.gcd.lead)
        e = (res.u.scale_left(c) * g).mod_xn(n)
        if is_idempotent(e, n) and SkewCyclicCode(n, e, h).gray_code() == target:
            return e
    # bounded search through the codewords
    size = ring.field.q ** target.k
    if size > search_bound:
        raise ConstructionError(f"no idempotent from the Euclidean route; search over {size} words exceeds bound")
    basis = target.generator
    F = ring.field
    for coeffs in itertools.product(range(F.q), repeat=target.k):
        vec = np.zeros(n, dtype=np.int64)
        for c, row in zip(coeffs, basis):
            if c:
                vec = F.add_table[vec, F.mul_table[c, row]]
        e = vector_poly(vec, ring)
        if e.is_zero() or not is_idempotent(e, n):
            continue
        span = span_code([poly_vector(e.shift(j), n) for j in range(n)], F, n)
        if span == target:
            return e
    raise ConstructionError("code has no idempotent generator")


def make_idempotent_generator(code: SkewCyclicCode, search_bound: int = 10 ** 6) -> SkewPoly:
    """Idempotent e with <e> = <g>; componentwise over S and rejoined."""
    n, ring = code.n, code.ring
    if math.gcd(n, ring.order) != 1 or math.gcd(n, ring.field.p) != 1:
        raise HypothesisError(
            f"idempotent generators need gcd(n, m_t) = gcd(n, q) = 1 (n={n}, m_t={ring.order}, q={ring.field.q})")
    if ring.is_s:
        c1, c2 = split_crt_code(code)
        e = ring.join(_idempotent_component(c1, search_bound), _idempotent_component(c2, search_bound))
    else:
        e = _idempotent_component(code, search_bound)
    if not is_idempotent(e, n):
        raise ConstructionError("constructed element is not idempotent")
    return e
