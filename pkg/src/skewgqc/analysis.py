"""Linear codes over F_q, brute-force distances and verification reports.

Everything here works on Gray images, i.e. plain F_q-linear codes.  Code
objects from :mod:`skewgqc.skew_cyclic` and :mod:`skewgqc.sgqc` are used
through a small duck-typed surface: ``gray_code(convention)``, ``shift(vec)``
and ``ring``.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

import numpy as np

from . import _kernels
from .errors import BudgetExceededError, NotCrtFormError, SpecMismatchError, UndefinedDistanceError
from .finite_field import FieldSpec

DEFAULT_BUDGET = 10 ** 8
CROSS_CHECK_LIMIT = 10 ** 6  # projective words


class LinearCodeFq:
    """F_q-linear code stored as a reduced row echelon generator matrix."""

    def __init__(self, field: FieldSpec, rows, n: int | None = None):
        rows = np.asarray(rows, dtype=np.int64)
        if rows.size == 0:
            n = n if n is not None else (rows.shape[-1] if rows.ndim == 2 else 0)
            rows = np.zeros((0, n), dtype=np.int64)
        elif rows.ndim == 1:
            rows = rows.reshape(1, -1)
        if n is None:
            n = rows.shape[1]
        if rows.shape[1] != n:
            raise SpecMismatchError(f"rows have length {rows.shape[1]}, expected {n}")
        self.field = field
        self.n = int(n)
        self.generator, self.pivots = _kernels.rref(rows, field)
        self._d = None

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    @property
    def size(self) -> int:
        return self.field.q ** self.k

    def reduce(self, word) -> np.ndarray:
        """Residue of ``word`` after eliminating the pivot columns."""
        w = np.array(word, dtype=np.int64)
        F = self.field
        for row, p in zip(self.generator, self.pivots):
            c = w[p]
            if c:
                w = F.sub_table[w, F.mul_table[c, row]]
        return w

    def contains(self, word) -> bool:
        return not self.reduce(word).any()

    def contains_code(self, other: "LinearCodeFq") -> bool:
        return all(self.contains(r) for r in other.generator)

    def __eq__(self, other):
        if not isinstance(other, LinearCodeFq):
            return NotImplemented
        return (self.field == other.field and self.n == other.n and self.k == other.k
                and np.array_equal(self.generator, other.generator))

    def __hash__(self):
        return hash((self.field, self.n, self.generator.tobytes()))

    def key(self) -> bytes:
        return self.generator.tobytes()

    def dual(self) -> "LinearCodeFq":
        """Euclidean dual: null space of the generator matrix."""
        F, n = self.field, self.n
        free = [c for c in range(n) if c not in set(self.pivots.tolist())]
        basis = np.zeros((len(free), n), dtype=np.int64)
        for r, f in enumerate(free):
            basis[r, f] = 1
            for row, p in zip(self.generator, self.pivots):
                basis[r, p] = F.neg(int(row[f]))
        return LinearCodeFq(F, basis, n)

    def project(self, cols) -> "LinearCodeFq":
        return LinearCodeFq(self.field, self.generator[:, list(cols)], len(cols))

    def min_distance(self, budget: int = DEFAULT_BUDGET, partitions: int = 1) -> int:
        if self._d is None:
            self._d = min_distance(self, budget=budget, partitions=partitions)
        return self._d

    @property
    def d(self):
        return self._d

    def params(self, budget: int = DEFAULT_BUDGET):
        return self.n, self.k, self.min_distance(budget)

    def __repr__(self):
        return f"LinearCodeFq(q={self.field.q}, n={self.n}, k={self.k})"


def span_code(vectors: Sequence, field: FieldSpec, n: int) -> LinearCodeFq:
    vecs = [np.asarray(v, dtype=np.int64) for v in vectors]
    return LinearCodeFq(field, np.array(vecs, dtype=np.int64).reshape(len(vecs), n), n)


@dataclass
class ParamReport:
    n: int
    k: int
    d: int | None
    convention: str
    enumerated: int = 0
    elapsed: float = 0.0
    flags: list = dc_field(default_factory=list)

    @property
    def params(self):
        return self.n, self.k, self.d

    def __str__(self):
        d = "undefined" if self.d is None else self.d
        return f"[{self.n},{self.k},{d}]"

    def describe(self) -> str:
        s = f"{self} ({self.convention}; {self.enumerated} words; {self.elapsed:.2f}s)"
        if self.flags:
            s += " flags: " + "; ".join(self.flags)
        return s

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "convention": self.convention,
                "enumerated": self.enumerated, "elapsed": round(self.elapsed, 4),
                "flags": list(self.flags)}


def min_distance(code: LinearCodeFq, budget: int = DEFAULT_BUDGET, partitions: int = 1,
                 use_numba: bool | None = None) -> int:
    """Minimum nonzero weight by enumerating the message space.

    Only projective representatives are visited ((q^k - 1)/(q - 1) words).
    With ``partitions > 1`` the leading-pivot positions are dealt round-robin
    to worker threads and the minima combined; the result does not depend on
    the partitioning.
    """
    if code.k == 0:
        raise UndefinedDistanceError("the zero code has no minimum distance")
    cost = _kernels.projective_count(code.k, code.field.q)
    if cost > budget:
        raise BudgetExceededError(f"enumeration needs {cost} words, budget is {budget}",
                                  required=cost, budget=budget)
    G = code.generator
    if partitions <= 1:
        return _kernels.min_weight(G, code.field, use_numba=use_numba)
    parts = [list(range(i, code.k, partitions)) for i in range(partitions)]
    parts = [p for p in parts if p]
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        results = pool.map(lambda ps: _kernels.min_weight(G, code.field, pivots=ps, use_numba=use_numba),
                           parts)
        return min(results)


def gray_image(code, convention: str | None = None) -> LinearCodeFq:
    if isinstance(code, LinearCodeFq):
        return code
    return code.gray_code(convention)


def min_lee_distance(code, convention: str | None = None, budget: int = DEFAULT_BUDGET) -> int:
    """Lee distance over S equals Hamming distance of the Gray image."""
    return min_distance(gray_image(code, convention), budget=budget)


def params_report(code, convention: str | None = None, budget: int = DEFAULT_BUDGET,
                  label: str | None = None) -> ParamReport:
    start = time.perf_counter()
    g = gray_image(code, convention)
    d, flags = None, []
    if g.k:
        try:
            d = min_distance(g, budget=budget)
        except BudgetExceededError as exc:
            flags.append(f"distance skipped: needs {exc.required} words")
    else:
        flags.append("zero code: distance undefined")
    cost = _kernels.projective_count(g.k, g.field.q) if d is not None else 0
    return ParamReport(g.n, g.k, d, label or convention or "paper-table", cost,
                       time.perf_counter() - start, flags)


@dataclass(frozen=True)
class ReductionResult:
    k: int
    d: int
    k1: int
    d1: int
    k2: int
    d2: int
    cross_checked: bool


def component_distance_reduction(code, convention: str = "full-module",
                                 budget: int = DEFAULT_BUDGET, cross_check: bool = True) -> ReductionResult:
    """[2N, k, d] of (1-v)C1 + vC2 from the two component codes.

    The Gray image of such a code is C1 x C2, so k = k1 + k2 and
    d = min(d1, d2).  Anything whose Gray image is not a product of its two
    halves is refused.
    """
    g = gray_image(code, convention)
    if g.n % 2:
        raise NotCrtFormError("odd length: not the Gray image of an S-code")
    half = g.n // 2
    c1 = g.project(range(half))
    c2 = g.project(range(half, g.n))
    if c1.k + c2.k != g.k:
        raise NotCrtFormError(
            f"Gray image has dimension {g.k} but its halves span {c1.k} + {c2.k}; "
            "not of the form (1-v)C1 + vC2, use min_distance")
    d1 = min_distance(c1, budget) if c1.k else None
    d2 = min_distance(c2, budget) if c2.k else None
    ds = [d for d in (d1, d2) if d is not None]
    if not ds:
        raise UndefinedDistanceError("the zero code has no minimum distance")
    d = min(ds)
    checked = False
    if cross_check and _kernels.projective_count(g.k, g.field.q) <= CROSS_CHECK_LIMIT:
        direct = min_distance(g, budget)
        if direct != d:
            raise AssertionError(f"component reduction gave {d}, enumeration {direct}")
        checked = True
    return ReductionResult(g.k, d, c1.k, d1 or 0, c2.k, d2 or 0, checked)


def rank_over_gray(rows: Sequence, ring, convention: str = "paper-table") -> int:
    """F_q-rank of the Gray images of ``rows`` (vectors of ring codes).

    Under the full-module convention the v-multiples of each row are
    included as well.
    """
    rows = [np.asarray(r, dtype=np.int64) for r in rows]
    if not rows:
        return 0
    vecs = [ring.gray(r) for r in rows]
    if convention == "full-module" and ring.kind == "S":
        vecs += [ring.gray(ring.vmul(np.full_like(r, ring.v), r)) for r in rows]
    n = vecs[0].shape[0]
    return span_code(vecs, ring.field, n).k


@dataclass
class ClosureReport:
    ok: bool
    checked: int
    violator: int | None = None
    row: list | None = None
    image: list | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"closed under shift ({self.checked} basis rows checked)"
        return f"not closed: shift of basis row {self.violator} {self.row} -> {self.image} leaves the code"


def verify_closure(code, convention: str | None = None, shift: Callable | None = None,
                   ring=None) -> ClosureReport:
    """Check that the shift of every basis row stays in the Gray row space.

    ``code`` is either a code object (providing ``gray_code``, ``shift`` and
    ``ring``) or a :class:`LinearCodeFq` together with ``shift`` and the
    coefficient ``ring`` (FqRing or SRing) of the underlying vectors.
    """
    g = gray_image(code, convention)
    shift = shift or code.shift
    coef = ring if ring is not None else code.ring.coef
    for i, row in enumerate(g.generator):
        vec = coef.from_gray(row) if coef.kind == "S" else row
        image = coef.gray(shift(vec))
        if not g.contains(image):
            return ClosureReport(False, i + 1, i, row.tolist(), image.tolist())
    return ClosureReport(True, g.k)
