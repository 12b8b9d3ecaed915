"""Finite fields F_q = F_p[t]/(m(t)) with Frobenius-power automorphisms.

Elements are encoded as integers ``sum(c_i * p**i)`` over their
polynomial-basis coordinates.  All arithmetic goes through lookup tables
built once per :class:`FieldSpec`, which is why fields are capped at 512
elements.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import FieldSizeError, NonUnitError, SpecMismatchError

MAX_FIELD_SIZE = 512

# Conway polynomials, ascending coefficients.
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (7, 1): (4, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, math.isqrt(n) + 1))


def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod_p(a, b, p):
    """Remainder of a by monic-or-not b over F_p (ascending lists)."""
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = pow(b[-1], p - 2, p) if p > 2 else 1
    while len(a) >= len(b):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        a = _poly_trim(a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = [c % p for c in modulus]
    d = len(_poly_trim(m)) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            if not _poly_mod_p(m, list(tail) + [1], p):
                return False
    return True


def _first_primitive_modulus(p: int, d: int):
    for tail in itertools.product(range(p), repeat=d):
        cand = tuple(reversed(tail)) + (1,)
        if cand[0] == 0 or not is_irreducible(cand, p):
            continue
        try:
            spec = FieldSpec(p, d, cand)
        except ValueError:
            continue
        if spec.order(spec.basis_generator) == spec.q - 1:
            return cand
    raise ValueError(f"no primitive polynomial found for p={p}, d={d}")


def default_modulus(p: int, d: int) -> tuple:
    if (p, d) in CONWAY:
        return CONWAY[(p, d)]
    return _first_primitive_modulus(p, d)


class FieldSpec:
    """The field F_{p^d} with a fixed modulus and a labelled primitive element.

    ``primitive`` is the code of the element printed and parsed as ``t``.
    It defaults to the class of the polynomial variable when that is a
    generator of the multiplicative group.
    """

    def __init__(self, p: int, d: int = 1, modulus: Sequence[int] | None = None,
                 primitive: int | None = None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if d < 1:
            raise ValueError("extension degree must be >= 1")
        q = p ** d
        if q > MAX_FIELD_SIZE:
            raise FieldSizeError(f"q = {q} exceeds the table bound {MAX_FIELD_SIZE}")
        if modulus is None:
            modulus = default_modulus(p, d)
        modulus = tuple(int(c) % p for c in modulus)
        if len(_poly_trim(modulus)) != d + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus {modulus} is not monic of degree {d}")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.d = d
        self.q = q
        self.modulus = modulus
        self._build_tables()
        if primitive is None:
            primitive = self.basis_generator
            if self.order(primitive) != q - 1:
                primitive = next(a for a in range(1, q) if self.order(a) == q - 1)
        primitive = int(primitive)
        if not 0 < primitive < q or self.order(primitive) != q - 1:
            raise ValueError(f"element {primitive} is not primitive in F_{q}")
        self.primitive = primitive
        self._build_log()

    # -- construction ---------------------------------------------------
    @property
    def basis_generator(self) -> int:
        if self.d == 1:
            return (-self.modulus[0]) % self.p
        return self.p

    def coords(self, a: int) -> list:
        out = []
        for _ in range(self.d):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_coords(self, coeffs: Sequence[int]) -> int:
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def _polymul_reduce(self, a: int, b: int) -> int:
        p, d = self.p, self.d
        x, y = self.coords(a), self.coords(b)
        prod = [0] * (2 * d - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                for i in range(d + 1):
                    prod[k - d + i] = (prod[k - d + i] - c * self.modulus[i]) % p
        return self.from_coords(prod[:d])

    def _build_tables(self):
        q, p = self.q, self.p
        coords = np.array([self.coords(a) for a in range(q)], dtype=np.int64)
        weights = p ** np.arange(self.d, dtype=np.int64)
        add = ((coords[:, None, :] + coords[None, :, :]) % p) @ weights
        sub = ((coords[:, None, :] - coords[None, :, :]) % p) @ weights
        self.add_table = add.astype(np.int64)
        self.sub_table = sub.astype(np.int64)
        self.neg_table = ((-coords) % p) @ weights
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(1, q):
            for b in range(a, q):
                mul[a, b] = mul[b, a] = self._polymul_reduce(a, b)
        self.mul_table = mul
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.inv_table = inv
        # frob_tables[k][a] = a^(p^k)
        frob = np.zeros((self.d, q), dtype=np.int64)
        frob[0] = np.arange(q)
        for k in range(1, self.d):
            prev = frob[k - 1]
            cur = prev.copy()
            for _ in range(p - 1):
                cur = mul[cur, prev]
            frob[k] = cur
        self.frob_tables = frob
        for arr in (self.add_table, self.sub_table, self.neg_table, self.mul_table,
                    self.inv_table, self.frob_tables):
            arr.setflags(write=False)

    def _build_log(self):
        q = self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        a = 1
        for k in range(q - 1):
            exp[k] = a
            log[a] = k
            a = int(self.mul_table[a, self.primitive])
        self.exp_table = exp
        self.log_table = log

    def order(self, a: int) -> int:
        if a == 0:
            raise NonUnitError("0 has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = int(self.mul_table[x, a])
            k += 1
        return k

    # -- scalar arithmetic on codes -------------------------------------
    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.sub_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise NonUnitError("0 is not invertible")
        return int(self.inv_table[a])

    def power(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise NonUnitError("0 is not invertible")
            return 1 if k == 0 else 0
        return int(self.exp_table[(self.log_table[a] * k) % (self.q - 1)])

    def frob(self, a: int, k: int) -> int:
        """a^(p^k); k is reduced mod d so negative powers give the inverse map."""
        return int(self.frob_tables[k % self.d, a])

    def in_prime_field(self, a: int) -> bool:
        return a < self.p

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatchError("element belongs to another field")
            return value
        return FieldElement(self, int(value))

    def prime(self, n: int) -> int:
        """Code of the integer n viewed in the prime subfield."""
        return n % self.p

    # -- text -----------------------------------------------------------
    def render(self, a: int) -> str:
        if a < self.p:
            return str(a)
        k = int(self.log_table[a])
        return "t" if k == 1 else f"t^{k}"

    def parse(self, text: str) -> int:
        from .skew_poly import parse_scalar  # local: parser lives with polynomials
        return parse_scalar(text, self)

    # -- identity -------------------------------------------------------
    def _key(self):
        return (self.p, self.d, self.modulus, self.primitive)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec(p={self.p}, d={self.d}, modulus={list(self.modulus)}, primitive={self.primitive})"

    def with_primitive(self, primitive: int) -> "FieldSpec":
        return FieldSpec(self.p, self.d, self.modulus, primitive)

    def primitive_elements(self) -> list:
        return [a for a in range(1, self.q) if self.order(a) == self.q - 1]

    def to_dict(self) -> dict:
        return {"p": self.p, "d": self.d, "modulus": list(self.modulus)}


@dataclass(frozen=True)
class FieldElement:
    """A value of F_q bound to its :class:`FieldSpec`."""

    spec: FieldSpec = field(repr=False)
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.spec.q:
            raise ValueError(f"code {self.code} out of range for F_{self.spec.q}")

    @property
    def coeffs(self) -> list:
        return self.spec.coords(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatchError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.spec.prime(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(self.code, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(b, self.code))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.code, b))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.code))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.code))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.code, self.spec.inv(b)))

    def __pow__(self, k: int):
        return FieldElement(self.spec, self.spec.power(self.code, k))

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return self.spec.render(self.code)


@dataclass(frozen=True)
class Automorphism:
    """theta_t : a -> a^(p^t) on the field ``spec``."""

    spec: FieldSpec = field(repr=False)
    t: int

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("Frobenius exponent must be non-negative")

    @property
    def order(self) -> int:
        return aut_order(self.spec.d, self.t)

    def apply(self, a: int, times: int = 1) -> int:
        """Apply theta ``times`` times (negative for the inverse) to a code."""
        return self.spec.frob(a, self.t * times)

    def table(self, times: int = 1) -> np.ndarray:
        return self.spec.frob_tables[(self.t * times) % self.spec.d]

    def __call__(self, a: FieldElement) -> FieldElement:
        return frobenius(a, self)


def frobenius(a: FieldElement, aut: Automorphism) -> FieldElement:
    if a.spec != aut.spec:
        raise SpecMismatchError("element and automorphism are over different fields")
    return FieldElement(a.spec, aut.apply(a.code))


def aut_order(d: int, t: int) -> int:
    if d < 1 or t < 0:
        raise ValueError("need d >= 1 and t >= 0")
    return d // math.gcd(d, t)


def enumerate_field(spec: FieldSpec, bound: int = MAX_FIELD_SIZE) -> list:
    """All elements in increasing code order (lexicographic on reversed coordinates)."""
    if spec.q > bound:
        raise FieldSizeError(f"q = {spec.q} exceeds enumeration bound {bound}")
    return [FieldElement(spec, a) for a in range(spec.q)]


def field_from_dict(doc: dict) -> FieldSpec:
    return FieldSpec(int(doc["p"]), int(doc.get("d", 1)), doc.get("modulus"),
                     doc.get("primitive"))


def vec_add(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return spec.add_table[a, b]


def vec_sub(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return spec.sub_table[a, b]


def vec_scale(spec: FieldSpec, c: int, a: np.ndarray) -> np.ndarray:
    return spec.mul_table[c, a]


def dot(spec: FieldSpec, a: Iterable[int], b: Iterable[int]) -> int:
    acc = 0
    for x, y in zip(a, b):
        acc = spec.add(acc, spec.mul(x, y))
    return acc
