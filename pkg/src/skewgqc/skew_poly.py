"""Skew polynomial rings R[x; theta_t] over R = F_q or S.

Multiplication follows ``(a x^i)(b x^j) = a theta^i(b) x^(i+j)``.  Division,
gcrd/gcld and lclm are the usual noncommutative Euclidean routines; over S
they raise :class:`GcrdUndefinedError` when a zero divisor shows up as a
leading coefficient, and the public wrappers then fall back to computing
over the two CRT components.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (BudgetExceededError, DivisionError, GcrdUndefinedError, NonUnitError,
                     ParseError, SpecMismatchError)
from .finite_field import Automorphism, FieldSpec
from .ring_s import FqRing, SRing, make_ring

NEG_INF = -math.inf
DEFAULT_ENUM_BOUND = 10 ** 7


class SkewRing:
    """The ring R[x; theta_t]; factory and context for :class:`SkewPoly`."""

    def __init__(self, coef, t: int = 1):
        if isinstance(coef, FieldSpec):
            coef = FqRing(coef)
        self.coef = coef
        self.field: FieldSpec = coef.field
        self.t = int(t)
        self.aut = Automorphism(self.field, self.t)
        self.order = self.aut.order

    @classmethod
    def over(cls, field: FieldSpec, kind: str = "Fq", t: int = 1) -> "SkewRing":
        return cls(make_ring(field, kind), t)

    @property
    def is_s(self) -> bool:
        return self.coef.kind == "S"

    def theta(self, c: int, i: int = 1) -> int:
        return self.coef.frob(c, self.t * i)

    def poly(self, coeffs: Iterable[int]) -> "SkewPoly":
        return SkewPoly(self, coeffs)

    def const(self, c: int) -> "SkewPoly":
        return SkewPoly(self, [c])

    def monomial(self, c: int, k: int) -> "SkewPoly":
        return SkewPoly(self, [0] * k + [c])

    @property
    def zero(self) -> "SkewPoly":
        return SkewPoly(self, ())

    @property
    def one(self) -> "SkewPoly":
        return SkewPoly(self, (1,))

    @property
    def x(self) -> "SkewPoly":
        return SkewPoly(self, (0, 1))

    def xn_minus_1(self, n: int) -> "SkewPoly":
        return SkewPoly(self, [self.coef.neg(1)] + [0] * (n - 1) + [1])

    def parse(self, text: str) -> "SkewPoly":
        return parse_poly(text, self)

    def component_ring(self) -> "SkewRing":
        return SkewRing(FqRing(self.field), self.t)

    def s_ring(self) -> "SkewRing":
        return SkewRing(SRing(self.field), self.t)

    def split(self, f: "SkewPoly"):
        """CRT components of an S-polynomial, as polynomials over F_q."""
        if not self.is_s:
            return f, f
        comp = self.component_ring()
        pairs = [self.coef.crt(c) for c in f.coeffs]
        return comp.poly(c[0] for c in pairs), comp.poly(c[1] for c in pairs)

    def join(self, f1: "SkewPoly", f2: "SkewPoly") -> "SkewPoly":
        """(1 - v) f1 + v f2 over S."""
        if not self.is_s:
            raise SpecMismatchError("join requires a ring over S")
        n = max(len(f1.coeffs), len(f2.coeffs))
        a = list(f1.coeffs) + [0] * (n - len(f1.coeffs))
        b = list(f2.coeffs) + [0] * (n - len(f2.coeffs))
        return self.poly(self.coef.from_crt(x, y) for x, y in zip(a, b))

    def embed(self, f: "SkewPoly") -> "SkewPoly":
        """View an F_q-polynomial inside this ring (identity if already here)."""
        if f.ring == self:
            return f
        if f.ring.field != self.field or f.ring.t != self.t:
            raise SpecMismatchError("cannot embed across fields or automorphisms")
        return self.poly(self.coef.embed(c) for c in f.coeffs)

    def __eq__(self, other):
        return isinstance(other, SkewRing) and other.coef == self.coef and other.t == self.t

    def __hash__(self):
        return hash((self.coef, self.t))

    def __repr__(self):
        name = "S" if self.is_s else f"F_{self.field.q}"
        return f"SkewRing({name}[x; theta_{self.t}])"


class SkewPoly:
    """Immutable skew polynomial; ``coeffs`` ascending and trimmed."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewRing, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.ring = ring
        self.coeffs = tuple(c)

    # -- basics ---------------------------------------------------------
    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: "SkewPoly"):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise SpecMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __eq__(self, other):
        return isinstance(other, SkewPoly) and other.ring == self.ring and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"SkewPoly({render_poly(self)})"

    def __str__(self):
        return render_poly(self)

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        self._check(other)
        R = self.ring.coef
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, (R.add(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __sub__(self, other):
        self._check(other)
        R = self.ring.coef
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, (R.sub(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __neg__(self):
        R = self.ring.coef
        return SkewPoly(self.ring, (R.neg(c) for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self * self.ring.const(other)
        return skew_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.ring.const(other) * self
        return NotImplemented

    def __pow__(self, k: int):
        out = self.ring.one
        for _ in range(k):
            out = out * self
        return out

    def scale_left(self, c: int) -> "SkewPoly":
        R = self.ring.coef
        return SkewPoly(self.ring, (R.mul(c, a) for a in self.coeffs))

    def shift(self, k: int) -> "SkewPoly":
        """x^k * self."""
        th = self.ring.theta
        return SkewPoly(self.ring, [0] * k + [th(c, k) for c in self.coeffs])

    def monic(self) -> "SkewPoly":
        """Divide by the leading coefficient on the left."""
        if self.is_zero():
            raise DivisionError("the zero polynomial has no monic form")
        return self.scale_left(self.ring.coef.inv(self.lead))

    def monic_right(self) -> "SkewPoly":
        """Scale on the right so the leading coefficient becomes 1."""
        if self.is_zero():
            raise DivisionError("the zero polynomial has no monic form")
        R, d = self.ring.coef, self.deg
        c = self.ring.theta(R.inv(self.lead), -d)
        return self * self.ring.const(c)

    def mod_xn(self, n: int) -> "SkewPoly":
        """Reduce modulo the left ideal generated by x^n - 1 (fold exponents mod n)."""
        R = self.ring.coef
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            if c:
                out[i % n] = R.add(out[i % n], c)
        return SkewPoly(self.ring, out)

    def to_vector(self, n: int) -> list:
        red = self.mod_xn(n)
        return list(red.coeffs) + [0] * (n - len(red.coeffs))


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    f._check(g)
    if f.is_zero() or g.is_zero():
        return f.ring.zero
    R, th = f.ring.coef, f.ring.theta
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = R.add(out[i + j], R.mul(a, th(b, i)))
    return SkewPoly(f.ring, out)


@dataclass(frozen=True)
class DivisionResult:
    quotient: SkewPoly
    remainder: SkewPoly
    side: str

    def __iter__(self):
        return iter((self.quotient, self.remainder))


def _lead_inverse(b: SkewPoly) -> int:
    if b.is_zero():
        raise DivisionError("division by the zero polynomial")
    try:
        return b.ring.coef.inv(b.lead)
    except NonUnitError as exc:
        raise DivisionError(
            f"leading coefficient {b.ring.coef.render(b.lead)} of the divisor is not a unit") from exc


def right_divide(a: SkewPoly, b: SkewPoly, check: bool = True) -> DivisionResult:
    """a = q*b + r with deg r < deg b (long division from the top)."""
    a._check(b)
    inv_lb = _lead_inverse(b)
    R, th, ring = a.ring.coef, a.ring.theta, a.ring
    db = b.deg
    r = list(a.coeffs)
    quo = [0] * max(len(r) - db, 0)
    for k in range(len(r) - 1 - db, -1, -1):
        top = r[k + db]
        if not top:
            continue
        c = R.mul(top, th(inv_lb, k))
        quo[k] = c
        for j, bj in enumerate(b.coeffs):
            if bj:
                r[k + j] = R.sub(r[k + j], R.mul(c, th(bj, k)))
    res = DivisionResult(SkewPoly(ring, quo), SkewPoly(ring, r), "right")
    if check and res.quotient * b + res.remainder != a:
        raise AssertionError("right division failed to reconstruct the dividend")
    return res


def right_divide_recurrence(a: SkewPoly, b: SkewPoly) -> DivisionResult:
    """Right division solving the quotient coefficients top-down from q*b = a - r.

    Independent of :func:`right_divide`: it never forms partial remainders,
    only the convolution sums of the product.
    """
    a._check(b)
    inv_lb = _lead_inverse(b)
    R, th, ring = a.ring.coef, a.ring.theta, a.ring
    db, da = b.deg, len(a.coeffs) - 1
    if da < db:
        return DivisionResult(ring.zero, a, "right")
    dq = da - db
    quo = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        # coefficient of x^(k+db) in q*b, ignoring the unknown q_k
        acc = 0
        for i in range(k + 1, dq + 1):
            j = k + db - i
            if 0 <= j <= db and quo[i]:
                acc = R.add(acc, R.mul(quo[i], th(b.coeffs[j], i)))
        quo[k] = R.mul(R.sub(a.coeff(k + db), acc), th(inv_lb, k))
    q = SkewPoly(ring, quo)
    return DivisionResult(q, a - q * b, "right")


def left_divide(a: SkewPoly, b: SkewPoly, check: bool = True) -> DivisionResult:
    """a = b*q + r with deg r < deg b."""
    a._check(b)
    inv_lb = _lead_inverse(b)
    R, th, ring = a.ring.coef, a.ring.theta, a.ring
    db = b.deg
    r = list(a.coeffs)
    quo = [0] * max(len(r) - db, 0)
    for k in range(len(r) - 1 - db, -1, -1):
        top = r[k + db]
        if not top:
            continue
        c = th(R.mul(inv_lb, top), -db)
        quo[k] = c
        # b * (c x^k) = sum_j b_j theta^j(c) x^(j+k)
        for j, bj in enumerate(b.coeffs):
            if bj:
                r[k + j] = R.sub(r[k + j], R.mul(bj, th(c, j)))
    res = DivisionResult(SkewPoly(ring, quo), SkewPoly(ring, r), "left")
    if check and b * res.quotient + res.remainder != a:
        raise AssertionError("left division failed to reconstruct the dividend")
    return res


def is_right_divisor(g: SkewPoly, f: SkewPoly) -> bool:
    return right_divide(f, g).remainder.is_zero()


def is_left_divisor(g: SkewPoly, f: SkewPoly) -> bool:
    return left_divide(f, g).remainder.is_zero()


# -- Euclidean algorithms ----------------------------------------------------

@dataclass(frozen=True)
class EuclidResult:
    gcd: SkewPoly            # last nonzero remainder (not normalised)
    u: SkewPoly              # u*a + w*b = gcd (right) / a*u + b*w = gcd (left)
    w: SkewPoly
    u_end: SkewPoly          # u_end*a + w_end*b = 0 (right)
    w_end: SkewPoly


def _euclid(a: SkewPoly, b: SkewPoly, side: str) -> EuclidResult:
    a._check(b)
    ring = a.ring
    divide = right_divide if side == "right" else left_divide
    r0, r1 = a, b
    u0, w0, u1, w1 = ring.one, ring.zero, ring.zero, ring.one
    while not r1.is_zero():
        if not ring.coef.is_unit(r1.lead):
            raise GcrdUndefinedError(
                "gcrd undefined along Euclidean chain: leading coefficient "
                f"{ring.coef.render(r1.lead)} is a zero divisor")
        q, r = divide(r0, r1, check=False)
        if side == "right":
            u2, w2 = u0 - q * u1, w0 - q * w1
        else:
            u2, w2 = u0 - u1 * q, w0 - w1 * q
        r0, r1 = r1, r
        u0, w0, u1, w1 = u1, w1, u2, w2
    return EuclidResult(r0, u0, w0, u1, w1)


def xgcrd(a: SkewPoly, b: SkewPoly) -> EuclidResult:
    """Extended right Euclid: u*a + w*b = gcrd (up to a unit)."""
    return _euclid(a, b, "right")


def _gcrd_direct(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    if a.is_zero() and b.is_zero():
        raise DivisionError("gcrd(0, 0) is undefined")
    g = _euclid(a, b, "right").gcd
    return g.monic()


def gcrd(a: SkewPoly, b: SkewPoly, crt_fallback: bool = True) -> SkewPoly:
    """Greatest common right divisor.

    Monic over F_q.  Over S a direct Euclidean run is attempted first; when
    it meets a zero divisor the answer is assembled from the two CRT
    components as (1-v) g1 + v g2, which generates the same left ideal but
    is only monic when deg g1 == deg g2.
    """
    try:
        return _gcrd_direct(a, b)
    except (GcrdUndefinedError, NonUnitError):
        if not (crt_fallback and a.ring.is_s):
            raise
    ring = a.ring
    (a1, a2), (b1, b2) = ring.split(a), ring.split(b)
    return ring.join(_gcrd_direct(a1, b1), _gcrd_direct(a2, b2))


def gcld(a: SkewPoly, b: SkewPoly, crt_fallback: bool = True) -> SkewPoly:
    """Greatest common left divisor, normalised monic by right scaling."""
    try:
        if a.is_zero() and b.is_zero():
            raise DivisionError("gcld(0, 0) is undefined")
        return _euclid(a, b, "left").gcd.monic_right()
    except (GcrdUndefinedError, NonUnitError):
        if not (crt_fallback and a.ring.is_s):
            raise
    ring = a.ring
    (a1, a2), (b1, b2) = ring.split(a), ring.split(b)
    return ring.join(gcld(a1, b1), gcld(a2, b2))


def _lclm_direct(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    if a.is_zero() or b.is_zero():
        raise DivisionError("lclm with the zero polynomial")
    res = _euclid(a, b, "right")
    m = res.u_end * a
    if m.is_zero():
        raise AssertionError("extended Euclid produced a zero common multiple")
    m = m.monic()
    if not a.ring.is_s:
        g = res.gcd
        assert m.deg == a.deg + b.deg - g.deg, "lclm/gcrd degree identity violated"
    return m


def pad_join(ring: SkewRing, f1: SkewPoly, f2: SkewPoly) -> SkewPoly:
    """Monic S-polynomial of least degree with components x^i f1 and x^j f2."""
    D = max(f1.deg, f2.deg)
    return ring.join(f1.shift(D - f1.deg), f2.shift(D - f2.deg))


def lclm(a: SkewPoly, b: SkewPoly, crt_fallback: bool = True) -> SkewPoly:
    """Monic least common left multiple (u*a = w*b of least degree).

    Over S with a non-unit Euclidean chain, the components are computed
    separately and padded to a common degree so the result stays monic.
    """
    try:
        return _lclm_direct(a, b)
    except (GcrdUndefinedError, NonUnitError):
        if not (crt_fallback and a.ring.is_s):
            raise
    ring = a.ring
    (a1, a2), (b1, b2) = ring.split(a), ring.split(b)
    return pad_join(ring, _lclm_direct(a1, b1), _lclm_direct(a2, b2))


def lclm_many(polys: Sequence[SkewPoly]) -> SkewPoly:
    out = polys[0].monic() if polys[0].ring.coef.is_unit(polys[0].lead) else polys[0]
    for p in polys[1:]:
        out = lclm(out, p)
    return out


def monic_polys(ring: SkewRing, k: int):
    """All monic polynomials of degree k over the coefficient ring, in code order."""
    size = ring.coef.size
    for tail in itertools.product(range(size), repeat=k):
        yield SkewPoly(ring, tuple(reversed(tail)) + (1,))


def enumerate_right_divisors(n: int, k: int, ring: SkewRing,
                             bound: int = DEFAULT_ENUM_BOUND) -> list:
    """All monic degree-k right divisors of x^n - 1 (brute force)."""
    if k < 0 or k > n:
        return []
    if ring.is_s:
        comp = ring.component_ring()
        if ring.field.q ** k > bound:
            raise BudgetExceededError(f"q^k = {ring.field.q ** k} exceeds bound {bound}",
                                      required=ring.field.q ** k, budget=bound)
        divs = enumerate_right_divisors(n, k, comp, bound)
        if len(divs) ** 2 > bound:
            raise BudgetExceededError("too many component pairs", required=len(divs) ** 2, budget=bound)
        return [ring.join(d1, d2) for d1 in divs for d2 in divs]
    size = ring.coef.size ** k
    if size > bound:
        raise BudgetExceededError(f"{size} candidates exceed bound {bound}", required=size, budget=bound)
    target = ring.xn_minus_1(n)
    return [g for g in monic_polys(ring, k) if right_divide(target, g, check=False).remainder.is_zero()]


# -- text ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([txv])|(\^)|([+\-*()]))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:pos + 1]!r}", text, pos)
        start = m.start(m.lastindex)
        out.append((m.group(m.lastindex), start))
        pos = m.end()
    out.append(("", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, ring: SkewRing):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def pos(self):
        return self.toks[self.i][1]

    def take(self, expected=None):
        tok, pos = self.toks[self.i]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok or 'end of input'!r}", self.text, pos)
        self.i += 1
        return tok

    def parse(self) -> SkewPoly:
        if not self.text.strip():
            raise ParseError("empty polynomial", self.text, 0)
        val = self.expr()
        if self.peek() != "":
            raise ParseError(f"unexpected token {self.peek()!r}", self.text, self.pos())
        return val

    def expr(self):
        if self.peek() == "-":
            self.take()
            val = -self.term()
        else:
            val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.power()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                val = val * self.power()
            elif tok in ("(", "t", "x", "v") or tok.isdigit():
                val = val * self.power()
            else:
                return val

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            pos = self.pos()
            tok = self.take()
            if not tok.isdigit():
                raise ParseError("exponent must be a non-negative integer", self.text, pos)
            return base ** int(tok)
        return base

    def atom(self):
        tok, pos = self.toks[self.i]
        ring = self.ring
        if tok == "(":
            self.take()
            val = self.expr()
            self.take(")")
            return val
        if tok.isdigit():
            self.take()
            n = int(tok)
            if n >= ring.field.p:
                raise ParseError(f"integer {n} is outside the prime field F_{ring.field.p}", self.text, pos)
            return ring.const(ring.coef.embed(n))
        if tok == "t":
            self.take()
            return ring.const(ring.coef.embed(ring.field.primitive))
        if tok == "v":
            if not ring.is_s:
                raise ParseError("'v' is outside the coefficient ring F_q", self.text, pos)
            self.take()
            return ring.const(ring.coef.v)
        if tok == "x":
            self.take()
            return ring.x
        raise ParseError(f"unexpected token {tok or 'end of input'!r}", self.text, pos)


def parse_poly(text: str, ring: SkewRing) -> SkewPoly:
    """Parse a polynomial; products are evaluated left to right in the skew ring."""
    return _Parser(text, ring).parse()


def parse_scalar(text: str, field: FieldSpec) -> int:
    p = parse_poly(text, SkewRing(FqRing(field), 0))
    if p.deg not in (NEG_INF, 0):
        raise ParseError(f"{text!r} is not a field element", text, 0)
    return p.coeff(0)


def _render_coef(ring: SkewRing, c: int) -> str:
    if ring.is_s:
        a, b = ring.coef.parts(c)
        if b:
            F = ring.field
            return f"(({F.render(a)})+v*({F.render(b)}))"
    return ring.coef.render(c)


def render_poly(f: SkewPoly) -> str:
    """Canonical text, highest degree first; parses back to the same polynomial."""
    if f.is_zero():
        return "0"
    terms = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            terms.append(_render_coef(f.ring, c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{_render_coef(f.ring, c)}*{mono}")
    return "+".join(terms)
