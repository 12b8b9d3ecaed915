"""Coefficient rings F_q and S = F_q + vF_q (v^2 = v), the Gray map and CRT views.

Both rings encode elements as small integers so that polynomial and vector
code can stay ring-agnostic.  In S the element a + vb is stored as
``a + q*b`` (standard form); the CRT view (a, a + b) is computed on demand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import NonUnitError, SpecMismatchError
from .finite_field import Automorphism, FieldElement, FieldSpec


class FqRing:
    """F_q viewed as a coefficient ring."""

    kind = "Fq"

    def __init__(self, field: FieldSpec):
        self.field = field
        self.size = field.q
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return int(self.field.add_table[a, b])

    def sub(self, a, b):
        return int(self.field.sub_table[a, b])

    def neg(self, a):
        return int(self.field.neg_table[a])

    def mul(self, a, b):
        return int(self.field.mul_table[a, b])

    def is_unit(self, a) -> bool:
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NonUnitError("0 is not a unit of F_q")
        return int(self.field.inv_table[a])

    def frob(self, a, k):
        return int(self.field.frob_tables[k % self.field.d, a])

    def embed(self, a):
        return int(a)

    def components(self, c):
        return (c,)

    def render(self, c) -> str:
        return self.field.render(c)

    # vectorised helpers over arrays of codes
    def vadd(self, a, b):
        return self.field.add_table[a, b]

    def vsub(self, a, b):
        return self.field.sub_table[a, b]

    def vmul(self, a, b):
        return self.field.mul_table[a, b]

    def vfrob(self, a, k):
        return self.field.frob_tables[k % self.field.d][a]

    def gray(self, vec) -> np.ndarray:
        return np.asarray(vec, dtype=np.int64)

    def __eq__(self, other):
        return isinstance(other, FqRing) and other.field == self.field

    def __hash__(self):
        return hash(("Fq", self.field))

    def __repr__(self):
        return f"FqRing(q={self.field.q})"


class SRing:
    """S = F_q + vF_q with v^2 = v, elements coded as a + q*b."""

    kind = "S"

    def __init__(self, field: FieldSpec):
        self.field = field
        self.q = field.q
        self.size = field.q ** 2
        self.zero = 0
        self.one = 1
        self.v = self.q

    def code(self, a: int, b: int) -> int:
        return int(a) + self.q * int(b)

    def parts(self, c: int):
        b, a = divmod(int(c), self.q)
        return a, b

    def crt(self, c: int):
        a, b = self.parts(c)
        return a, self.field.add(a, b)

    def from_crt(self, c1: int, c2: int) -> int:
        return self.code(c1, self.field.sub(c2, c1))

    def add(self, x, y):
        a, b = self.parts(x)
        c, d = self.parts(y)
        F = self.field
        return self.code(F.add(a, c), F.add(b, d))

    def sub(self, x, y):
        a, b = self.parts(x)
        c, d = self.parts(y)
        F = self.field
        return self.code(F.sub(a, c), F.sub(b, d))

    def neg(self, x):
        a, b = self.parts(x)
        return self.code(self.field.neg(a), self.field.neg(b))

    def mul(self, x, y):
        # (a + vb)(c + vd) = ac + v(ad + bc + bd)
        a, b = self.parts(x)
        c, d = self.parts(y)
        F = self.field
        return self.code(F.mul(a, c), F.add(F.add(F.mul(a, d), F.mul(b, c)), F.mul(b, d)))

    def is_unit(self, x) -> bool:
        c1, c2 = self.crt(x)
        return c1 != 0 and c2 != 0

    def inv(self, x):
        c1, c2 = self.crt(x)
        if c1 == 0 or c2 == 0:
            which = " and ".join(n for n, c in (("(1-v)", c1), ("v", c2)) if c == 0)
            raise NonUnitError(f"{self.render(x)} is not a unit: its {which} CRT component vanishes")
        F = self.field
        return self.from_crt(F.inv(c1), F.inv(c2))

    def frob(self, x, k):
        a, b = self.parts(x)
        return self.code(self.field.frob(a, k), self.field.frob(b, k))

    def embed(self, a):
        return int(a)

    def components(self, c):
        return self.crt(c)

    def render(self, c) -> str:
        a, b = self.parts(c)
        if b == 0:
            return self.field.render(a)
        return f"({self.field.render(a)})+v*({self.field.render(b)})"

    # vectorised helpers
    def vparts(self, c):
        c = np.asarray(c, dtype=np.int64)
        return c % self.q, c // self.q

    def vcode(self, a, b):
        return np.asarray(a, dtype=np.int64) + self.q * np.asarray(b, dtype=np.int64)

    def vadd(self, x, y):
        a, b = self.vparts(x)
        c, d = self.vparts(y)
        T = self.field.add_table
        return self.vcode(T[a, c], T[b, d])

    def vsub(self, x, y):
        a, b = self.vparts(x)
        c, d = self.vparts(y)
        T = self.field.sub_table
        return self.vcode(T[a, c], T[b, d])

    def vmul(self, x, y):
        a, b = self.vparts(x)
        c, d = self.vparts(y)
        A, M = self.field.add_table, self.field.mul_table
        return self.vcode(M[a, c], A[A[M[a, d], M[b, c]], M[b, d]])

    def vfrob(self, x, k):
        a, b = self.vparts(x)
        T = self.field.frob_tables[k % self.field.d]
        return self.vcode(T[a], T[b])

    def gray(self, vec) -> np.ndarray:
        a, b = self.vparts(vec)
        return np.concatenate([a, self.field.add_table[a, b]])

    def from_gray(self, g) -> np.ndarray:
        g = np.asarray(g, dtype=np.int64)
        n = g.shape[-1] // 2
        c1, c2 = g[..., :n], g[..., n:]
        return self.vcode(c1, self.field.sub_table[c2, c1])

    def __eq__(self, other):
        return isinstance(other, SRing) and other.field == self.field

    def __hash__(self):
        return hash(("S", self.field))

    def __repr__(self):
        return f"SRing(q={self.q})"


def make_ring(field: FieldSpec, kind: str):
    if kind in ("Fq", "F", "field"):
        return FqRing(field)
    if kind == "S":
        return SRing(field)
    raise ValueError(f"unknown ring tag {kind!r}")


@dataclass(frozen=True)
class SElement:
    """a + v b in S = F_q + vF_q."""

    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.spec != self.b.spec:
            raise SpecMismatchError("coordinates over different fields")

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    @classmethod
    def from_code(cls, ring: SRing, c: int) -> "SElement":
        a, b = ring.parts(c)
        return cls(FieldElement(ring.field, a), FieldElement(ring.field, b))

    @classmethod
    def from_crt(cls, c1: FieldElement, c2: FieldElement) -> "SElement":
        return cls(c1, c2 - c1)

    @classmethod
    def v(cls, spec: FieldSpec) -> "SElement":
        return cls(FieldElement(spec, 0), FieldElement(spec, 1))

    @property
    def crt(self):
        return self.a, self.a + self.b

    def code(self) -> int:
        return self.a.code + self.spec.q * self.b.code

    def _coerce(self, other) -> "SElement":
        if isinstance(other, SElement):
            if other.spec != self.spec:
                raise SpecMismatchError("elements over different fields")
            return other
        if isinstance(other, FieldElement):
            return SElement(other, FieldElement(self.spec, 0))
        if isinstance(other, int):
            return SElement(FieldElement(self.spec, self.spec.prime(other)), FieldElement(self.spec, 0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return s_add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return s_add(self, s_neg(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return s_add(o, s_neg(self))

    def __mul__(self, other):
        o = self._coerce(other)
        return s_mul(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        return s_mul(o, self)

    def __neg__(self):
        return s_neg(self)

    def is_unit(self) -> bool:
        c1, c2 = self.crt
        return bool(c1) and bool(c2)

    def __str__(self):
        if not self.b:
            return str(self.a)
        return f"({self.a})+v*({self.b})"


def s_add(x: SElement, y: SElement) -> SElement:
    return SElement(x.a + y.a, x.b + y.b)


def s_neg(x: SElement) -> SElement:
    return SElement(-x.a, -x.b)


def s_mul(x: SElement, y: SElement) -> SElement:
    return SElement(x.a * y.a, x.a * y.b + y.a * x.b + x.b * y.b)


def s_inv(x: SElement) -> SElement:
    c1, c2 = x.crt
    missing = [name for name, c in (("(1-v)", c1), ("v", c2)) if not c]
    if missing:
        raise NonUnitError(f"{x} is not a unit: its {' and '.join(missing)} CRT component vanishes")
    return SElement.from_crt(c1.inverse(), c2.inverse())


def theta_s(s: SElement, aut: Automorphism) -> SElement:
    if s.spec != aut.spec:
        raise SpecMismatchError("element and automorphism over different fields")
    return SElement(aut(s.a), aut(s.b))


def gray(word: Sequence[SElement]) -> list:
    """phi(s_1..s_n) = (a_1..a_n, a_1+b_1..a_n+b_n) as a list of field elements."""
    word = list(word)
    return [s.a for s in word] + [s.a + s.b for s in word]


def lee_weight(s: SElement) -> int:
    return sum(1 for c in gray([s]) if c)


def lee_weight_vec(word: Sequence[SElement]) -> int:
    return sum(lee_weight(s) for s in word)


def lee_distance(x: SElement, y: SElement) -> int:
    return lee_weight(x - y)


def crt_split(obj, ring: SRing | None = None):
    """Split an S object into its two F_q components.

    Accepts an :class:`SElement`, a sequence of them, or an integer array of
    S-codes together with ``ring``.
    """
    if isinstance(obj, SElement):
        return obj.crt
    if ring is not None:
        a, b = ring.vparts(obj)
        return a, ring.field.add_table[a, b]
    parts = [s.crt for s in obj]
    return [c[0] for c in parts], [c[1] for c in parts]


def crt_join(c1, c2, ring: SRing | None = None):
    """(1 - v) c1 + v c2, elementwise."""
    if isinstance(c1, FieldElement):
        return SElement.from_crt(c1, c2)
    if ring is not None:
        c1 = np.asarray(c1, dtype=np.int64)
        c2 = np.asarray(c2, dtype=np.int64)
        return ring.vcode(c1, ring.field.sub_table[c2, c1])
    return [SElement.from_crt(x, y) for x, y in zip(c1, c2)]
