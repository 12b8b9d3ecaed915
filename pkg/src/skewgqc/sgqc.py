"""Skew generalized quasi-cyclic (SGQC) codes over F_q and S.

A code lives in R_{t_1} x ... x R_{t_l} with R_t = R[x; theta]/(x^t - 1) and
is a left submodule, i.e. closed under the blockwise twisted shift sigma_l.
Vectors are stored as flat integer arrays (blocks concatenated, each block
ascending in x); :class:`PolyTuple` is the polynomial view.

Two F_q-span conventions are supported when forming Gray images:

``paper-table``
    span of the generator-matrix rows x^j * r for each ledger row r and
    0 <= j < depth(r), depth being the degree of the row's annihilator
    (for triangular ledgers: of its diagonal entry).
``full-module``
    the whole S[x; theta]-module: x^j * r and v * x^j * r for j < M.
``shift-span``
    x^j * r for j < M with F_q scalars only (diagnostic).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property, reduce
from typing import Sequence

import numpy as np

from . import analysis
from .analysis import LinearCodeFq, ParamReport, span_code
from .errors import ConstructionError, DivisorError, SpecMismatchError
from .skew_cyclic import count_skew_cyclic, factor_xn_minus_1, sigma
from .skew_poly import SkewPoly, SkewRing, lclm, pad_join, right_divide

CONVENTIONS = ("paper-table", "full-module", "shift-span")


@dataclass(frozen=True)
class BlockProfile:
    blocks: tuple
    ring: SkewRing

    def __post_init__(self):
        blocks = tuple(int(t) for t in self.blocks)
        if not blocks or min(blocks) < 1:
            raise SpecMismatchError(f"block lengths must be positive, got {self.blocks}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def N(self) -> int:
        return sum(self.blocks)

    @property
    def l(self) -> int:
        return len(self.blocks)

    @property
    def M(self) -> int:
        """Shift period lcm(m_t, t_1, ..., t_l)."""
        return reduce(math.lcm, self.blocks, self.ring.order)

    @property
    def offsets(self) -> list:
        out, acc = [], 0
        for t in self.blocks:
            out.append(acc)
            acc += t
        return out

    def split(self, vec) -> list:
        vec = np.asarray(vec, dtype=np.int64)
        if vec.shape[-1] != self.N:
            raise SpecMismatchError(f"vector of length {vec.shape[-1]} does not match N = {self.N}")
        return [vec[..., o:o + t] for o, t in zip(self.offsets, self.blocks)]

    def zero(self) -> np.ndarray:
        return np.zeros(self.N, dtype=np.int64)

    def component(self) -> "BlockProfile":
        return BlockProfile(self.blocks, self.ring.component_ring())

    def over_s(self) -> "BlockProfile":
        return BlockProfile(self.blocks, self.ring.s_ring())

    def with_blocks(self, blocks) -> "BlockProfile":
        return BlockProfile(tuple(blocks), self.ring)


def sigma_l(word, profile: BlockProfile) -> np.ndarray:
    """Blockwise theta-twisted cyclic shift."""
    return np.concatenate([sigma(b, profile.ring) for b in profile.split(word)])


class PolyTuple:
    """(a_1(x), ..., a_l(x)) with a_i reduced mod x^{t_i} - 1."""

    __slots__ = ("profile", "polys")

    def __init__(self, profile: BlockProfile, polys: Sequence[SkewPoly]):
        polys = tuple(polys)
        if len(polys) != profile.l:
            raise SpecMismatchError(f"{len(polys)} components for {profile.l} blocks")
        for p in polys:
            if p.ring != profile.ring:
                raise SpecMismatchError(f"component over {p.ring!r}, profile over {profile.ring!r}")
        self.profile = profile
        self.polys = tuple(p.mod_xn(t) for p, t in zip(polys, profile.blocks))

    @classmethod
    def parse(cls, profile: BlockProfile, texts: Sequence[str]) -> "PolyTuple":
        return cls(profile, [profile.ring.parse(s) for s in texts])

    @classmethod
    def from_vector(cls, profile: BlockProfile, vec) -> "PolyTuple":
        ring = profile.ring
        return cls(profile, [ring.poly(int(c) for c in b) for b in profile.split(vec)])

    @classmethod
    def zero(cls, profile: BlockProfile) -> "PolyTuple":
        return cls(profile, [profile.ring.zero] * profile.l)

    def to_vector(self) -> np.ndarray:
        return np.concatenate([np.asarray(p.to_vector(t), dtype=np.int64)
                               for p, t in zip(self.polys, self.profile.blocks)])

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.polys)

    def __add__(self, other: "PolyTuple") -> "PolyTuple":
        return PolyTuple(self.profile, [a + b for a, b in zip(self.polys, other.polys)])

    def __sub__(self, other: "PolyTuple") -> "PolyTuple":
        return PolyTuple(self.profile, [a - b for a, b in zip(self.polys, other.polys)])

    def __rmul__(self, s: SkewPoly) -> "PolyTuple":
        return module_mul(s, self)

    def shift(self, j: int = 1) -> "PolyTuple":
        return PolyTuple(self.profile, [p.shift(j) for p in self.polys])

    def scale_left(self, c: int) -> "PolyTuple":
        return PolyTuple(self.profile, [p.scale_left(c) for p in self.polys])

    def components(self):
        """CRT components as two tuples over F_q."""
        comp = self.profile.component()
        parts = [self.profile.ring.split(p) for p in self.polys]
        return PolyTuple(comp, [a for a, _ in parts]), PolyTuple(comp, [b for _, b in parts])

    def __eq__(self, other):
        return isinstance(other, PolyTuple) and other.profile == self.profile and other.polys == self.polys

    def __hash__(self):
        return hash((self.profile, self.polys))

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.polys) + ")"

    __repr__ = __str__


def module_mul(s: SkewPoly, a: PolyTuple) -> PolyTuple:
    """s(x) * (a_1, ..., a_l), each product reduced mod x^{t_i} - 1."""
    if s.ring != a.profile.ring:
        raise SpecMismatchError("multiplier and tuple over different rings")
    return PolyTuple(a.profile, [s * p for p in a.polys])


def crt_join_tuples(a: PolyTuple, b: PolyTuple) -> PolyTuple:
    """(1 - v) a + v b for two F_q tuples with the same blocks."""
    if a.profile.blocks != b.profile.blocks:
        raise SpecMismatchError("profiles differ")
    prof = a.profile.over_s()
    return PolyTuple(prof, [prof.ring.join(x, y) for x, y in zip(a.polys, b.polys)])


# -- annihilators -----------------------------------------------------------------

def _fq_block_annihilator(p: SkewPoly, t: int) -> SkewPoly:
    ring = p.ring
    if p.is_zero():
        return ring.one
    m = lclm(p, ring.xn_minus_1(t))
    q, r = right_divide(m, p)
    assert r.is_zero()
    return q.monic()


def _fq_tuple_annihilator(a: PolyTuple) -> SkewPoly:
    anns = [_fq_block_annihilator(p, t) for p, t in zip(a.polys, a.profile.blocks)]
    out = anns[0]
    for h in anns[1:]:
        out = lclm(out, h)
    return out


def annihilator(a: PolyTuple) -> SkewPoly:
    """Monic f of least degree with f * a = 0 in every block.

    Over F_q: lclm over the blocks of lclm(a_i, x^{t_i} - 1) /_r a_i.
    Over S: computed on the CRT components and padded to a common degree.
    """
    ring = a.profile.ring
    if not ring.is_s:
        return _fq_tuple_annihilator(a)
    a1, a2 = a.components()
    return pad_join(ring, _fq_tuple_annihilator(a1), _fq_tuple_annihilator(a2))


def _fq_annihilator_linear(a: PolyTuple) -> SkewPoly:
    """First F_q-dependence among a, x a, x^2 a, ... read off as a monic polynomial."""
    ring, F = a.profile.ring, a.profile.ring.field
    vecs = []
    for j in range(a.profile.M * a.profile.N + 2):
        vec = a.shift(j).to_vector()
        if vecs:
            M = np.array(vecs, dtype=np.int64)
            basis = span_code(vecs, F, len(vec))
            if basis.k == len(vecs) and basis.contains(vec):
                # solve sum c_i vecs_i = vec via an augmented reduction
                aug = np.concatenate([M.T, vec[:, None]], axis=1)
                red, piv = analysis._kernels.rref(aug, F)
                coeffs = [0] * len(vecs)
                for row, p in zip(red, piv):
                    coeffs[p] = int(row[-1])
                return ring.poly([F.neg(c) for c in coeffs] + [1])
        elif not vec.any():
            return ring.one
        vecs.append(vec)
    raise AssertionError("no linear dependence found among the shifts")


def annihilator_linear(a: PolyTuple) -> SkewPoly:
    """Second route to :func:`annihilator` through linear algebra on the shifts."""
    ring = a.profile.ring
    if not ring.is_s:
        return _fq_annihilator_linear(a)
    a1, a2 = a.components()
    return pad_join(ring, _fq_annihilator_linear(a1), _fq_annihilator_linear(a2))


# -- codes ----------------------------------------------------------------------------

@dataclass
class SgqcCode:
    profile: BlockProfile
    ledger: tuple
    kind: str = "rho"
    convention: str = "paper-table"
    flags: list = dc_field(default_factory=list)
    joined: PolyTuple | None = None

    def __post_init__(self):
        self.ledger = tuple(self.ledger)
        for r in self.ledger:
            if r.profile != self.profile:
                raise SpecMismatchError("ledger row profile differs from the code profile")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        self._gray_cache = {}

    @property
    def ring(self) -> SkewRing:
        return self.profile.ring

    @property
    def field(self):
        return self.ring.field

    @property
    def is_triangular(self) -> bool:
        l = self.profile.l
        if self.kind != "rho" or len(self.ledger) != l or l == 1:
            return False
        return all(self.ledger[i][j].is_zero() for i in range(l) for j in range(i + 1, l)) \
            and all(not self.ledger[i][i].is_zero() for i in range(l))

    @cached_property
    def parity_check(self) -> SkewPoly:
        """Monic minimal annihilator of the single generator (1-generator codes)."""
        if len(self.ledger) != 1:
            raise ConstructionError("parity-check polynomial is defined for 1-generator codes")
        return annihilator(self.ledger[0])

    def depths(self) -> list:
        if self.is_triangular:
            out = []
            for i, row in enumerate(self.ledger):
                t = self.profile.blocks[i]
                single = PolyTuple(self.profile.with_blocks((t,)), [row[i]])
                out.append(annihilator(single).deg)
            return out
        return [annihilator(r).deg for r in self.ledger]

    def generator_rows(self) -> list:
        """PolyTuples x^j * r, j < depth(r): the generator matrix over the ring."""
        return [r.shift(j) for r, d in zip(self.ledger, self.depths()) for j in range(d)]

    def generator_matrix(self) -> np.ndarray:
        rows = [r.to_vector() for r in self.generator_rows()]
        return np.array(rows, dtype=np.int64).reshape(len(rows), self.profile.N)

    def spanning_vectors(self, convention: str | None = None) -> list:
        conv = convention or self.convention
        if conv == "paper-table":
            return [r.to_vector() for r in self.generator_rows()]
        M = self.profile.M
        out = []
        for r in self.ledger:
            for j in range(M):
                s = r.shift(j)
                out.append(s.to_vector())
                if conv == "full-module" and self.ring.is_s:
                    out.append(s.scale_left(self.ring.coef.v).to_vector())
        if conv not in CONVENTIONS:
            raise ValueError(f"unknown convention {conv!r}")
        return out

    def gray_code(self, convention: str | None = None) -> LinearCodeFq:
        conv = convention or self.convention
        if conv not in self._gray_cache:
            coef = self.ring.coef
            width = 2 * self.profile.N if self.ring.is_s else self.profile.N
            vecs = [coef.gray(v) for v in self.spanning_vectors(conv)]
            self._gray_cache[conv] = span_code(vecs, self.field, width)
        return self._gray_cache[conv]

    def shift(self, vec) -> np.ndarray:
        return sigma_l(vec, self.profile)

    def contains(self, vec, convention: str | None = None) -> bool:
        return self.gray_code(convention).contains(self.ring.coef.gray(np.asarray(vec, dtype=np.int64)))

    def params(self, convention: str | None = None, budget: int = analysis.DEFAULT_BUDGET) -> ParamReport:
        return analysis.params_report(self, convention or self.convention, budget)

    def components(self):
        """CRT component codes over F_q (ledger rows split coefficientwise)."""
        if not self.ring.is_s:
            raise SpecMismatchError("components are defined for codes over S")
        parts = [r.components() for r in self.ledger]
        comp = self.profile.component()
        return (SgqcCode(comp, [a for a, _ in parts], self.kind, self.convention),
                SgqcCode(comp, [b for _, b in parts], self.kind, self.convention))

    def rank_report(self) -> dict:
        """Rank by the triangular-form formula next to the row-reduction ranks."""
        rep = {"paper-table": self.gray_code("paper-table").k,
               "full-module": self.gray_code("full-module").k,
               "formula": None, "formula_log_q_size": None, "flags": []}
        if self.is_triangular:
            total = sum(self.depths())
            rep["formula"] = total
            rep["formula_log_q_size"] = 2 * total if self.ring.is_s else total
            if total != rep["paper-table"]:
                rep["flags"].append(f"formula rank {total} != paper-table rank {rep['paper-table']}")
            if rep["formula_log_q_size"] != rep["full-module"]:
                rep["flags"].append(f"formula |C| = q^{rep['formula_log_q_size']} but full-module span "
                                    f"has q^{rep['full-module']} words")
        return rep

    def export_matrix(self) -> str:
        """Generator matrix over the ring, one row per line, blocks separated by '|'."""
        coef = self.ring.coef
        lines = []
        for row in self.generator_matrix():
            blocks = self.profile.split(row)
            lines.append(" | ".join(" ".join(coef.render(int(c)) for c in b) for b in blocks))
        return "\n".join(lines) + ("\n" if lines else "")

    def __repr__(self):
        return f"SgqcCode(blocks={self.profile.blocks}, rows={len(self.ledger)}, kind={self.kind})"


def build_1gen(profile: BlockProfile, e: PolyTuple, strict_divisors: bool = False,
               convention: str = "paper-table") -> SgqcCode:
    """1-generator code <e>; with ``strict_divisors`` every e_i must right-divide x^{t_i} - 1."""
    if strict_divisors:
        for i, (p, t) in enumerate(zip(e.polys, profile.blocks)):
            _require_divisor(p, t, f"component {i + 1}")
    code = SgqcCode(profile, (e,), "1gen", convention)
    f = code.parity_check
    g = annihilator_linear(e)
    if f != g:
        raise AssertionError(f"annihilator routes disagree: {f} vs {g}")
    return code


def _require_divisor(p: SkewPoly, t: int, what: str):
    from .skew_cyclic import _divides_xn
    if p.is_zero():
        return
    ok, _, rem = _divides_xn(p, t)
    if not ok:
        raise DivisorError(f"{what}: {p} does not right-divide x^{t}-1 (remainder {rem})", remainder=rem)


def build_rho_gen(profile: BlockProfile, ledger: Sequence[PolyTuple], check_conventions: bool = False,
                  convention: str = "paper-table") -> SgqcCode:
    """Code spanned by several generator tuples (triangular or not).

    With ``check_conventions`` the triangular normal-form conditions are
    checked (diagonal entries divide x^{t_i} - 1, deg p_ij < deg f_{t_j},
    q_{t_i} p_{i,i-1} in <f_{t_{i-1}}>) and violations are recorded in
    ``code.flags``; the code is built either way.
    """
    code = SgqcCode(profile, tuple(ledger), "rho", convention)
    if check_conventions:
        code.flags.extend(_triangular_violations(code))
    return code


def _triangular_violations(code: SgqcCode) -> list:
    if not code.is_triangular:
        return ["ledger is not lower triangular"]
    out, prof = [], code.profile
    diag = [code.ledger[i][i] for i in range(prof.l)]
    qs = []
    for i, (f, t) in enumerate(zip(diag, prof.blocks)):
        try:
            _require_divisor(f, t, f"f_t{i + 1}")
            qs.append(right_divide(prof.ring.xn_minus_1(t), f).quotient
                      if prof.ring.coef.is_unit(f.lead) else None)
        except DivisorError as exc:
            out.append(str(exc))
            qs.append(None)
    for i in range(1, prof.l):
        for j in range(i):
            p = code.ledger[i][j]
            if not p.is_zero() and p.deg >= diag[j].deg:
                out.append(f"row {i + 1}: deg p_{i + 1}{j + 1} = {p.deg} is not below deg f_t{j + 1} = {diag[j].deg}")
        q, p, f = qs[i], code.ledger[i][i - 1], diag[i - 1]
        if q is not None and prof.ring.coef.is_unit(f.lead):
            prod = (q * p).mod_xn(prof.blocks[i - 1])
            if not right_divide(prod, f).remainder.is_zero() and \
                    not right_divide(prof.ring.xn_minus_1(prof.blocks[i - 1]) + prod, f).remainder.is_zero():
                out.append(f"row {i + 1}: q_t{i + 1} * p_{i + 1}{i} is not in <f_t{i}>")
    return out


def combine_crt_sgqc(c1: SgqcCode, c2: SgqcCode) -> SgqcCode:
    """(1 - v)C1 + vC2 with ledger [(1-v) r for r in C1] + [v r for r in C2].

    For 1-generator inputs the single generator h = (1-v)e + v e' is kept
    in ``code.joined``.
    """
    if c1.profile != c2.profile:
        raise SpecMismatchError(f"profiles differ: {c1.profile.blocks} vs {c2.profile.blocks}")
    if c1.ring.is_s:
        raise SpecMismatchError("components must be codes over F_q")
    zero = PolyTuple.zero(c1.profile)
    ledger = [crt_join_tuples(r, zero) for r in c1.ledger] + [crt_join_tuples(zero, r) for r in c2.ledger]
    code = SgqcCode(c1.profile.over_s(), tuple(ledger), "crt", c1.convention)
    if len(c1.ledger) == 1 and len(c2.ledger) == 1:
        h = crt_join_tuples(c1.ledger[0], c2.ledger[0])
        code.joined = h
        for i, (p, t) in enumerate(zip(h.polys, h.profile.blocks)):
            a, b = c1.ledger[0][i], c2.ledger[0][i]
            divides = all(x.is_zero() or right_divide(x.ring.xn_minus_1(t), x.monic()).remainder.is_zero()
                          for x in (a, b))
            if divides:
                _require_divisor(p, t, f"joined component {i + 1}")
    return code


def split_crt_sgqc(code: SgqcCode):
    return code.components()


# -- Hermitian product --------------------------------------------------------------

def hermitian_conjugate(p: SkewPoly, t: int) -> SkewPoly:
    """psi(a x^i) = theta^{-i}(a) x^{t - i}, reduced mod x^t - 1."""
    ring = p.ring
    out = [0] * t
    for i, a in enumerate(p.mod_xn(t).coeffs):
        if a:
            k = (t - i) % t
            out[k] = ring.coef.add(out[k], ring.theta(a, -i))
    return ring.poly(out)


def hermitian_product(a: PolyTuple, b: PolyTuple) -> SkewPoly:
    """sum_i a_i * psi_i(b_i); each block product taken mod x^{t_i} - 1 and
    repeated periodically up to L = lcm(t_i) before summing."""
    if a.profile != b.profile:
        raise SpecMismatchError("tuples over different profiles")
    prof = a.profile
    L = reduce(math.lcm, prof.blocks, 1)
    ring, coef = prof.ring, prof.ring.coef
    total = [0] * L
    for ai, bi, t in zip(a.polys, b.polys, prof.blocks):
        block = (ai * hermitian_conjugate(bi, t)).to_vector(t)
        for w in range(L):
            total[w] = coef.add(total[w], block[w % t])
    return ring.poly(total)


def euclidean_product(u, v, ring) -> int:
    coef = ring.coef
    acc = 0
    for x, y in zip(np.asarray(u).tolist(), np.asarray(v).tolist()):
        if x and y:
            acc = coef.add(acc, coef.mul(x, y))
    return acc


# -- duality ------------------------------------------------------------------------

@dataclass
class DualWitness:
    profile: BlockProfile
    gray: LinearCodeFq
    generator_matrix: np.ndarray
    inner_product: str = "Euclidean on vectors; Hermitian on polynomial tuples"
    closure: analysis.ClosureReport | None = None
    hermitian_checked: bool = False

    @property
    def ring(self):
        return self.profile.ring

    def gray_code(self, convention: str | None = None) -> LinearCodeFq:
        return self.gray

    def shift(self, vec):
        return sigma_l(vec, self.profile)


def dual_code(code: SgqcCode, check_hermitian: bool = True) -> DualWitness:
    """Euclidean dual of the full module, computed on the CRT components."""
    prof, coef = code.profile, code.ring.coef
    g = code.gray_code("full-module")
    N = prof.N
    if code.ring.is_s:
        d1 = g.project(range(N)).dual()
        d2 = g.project(range(N, 2 * N)).dual()
        rows = [np.concatenate([r, np.zeros(N, dtype=np.int64)]) for r in d1.generator]
        rows += [np.concatenate([np.zeros(N, dtype=np.int64), r]) for r in d2.generator]
        gray = span_code(rows, code.field, 2 * N)
        matrix = np.array([coef.from_gray(r) for r in gray.generator], dtype=np.int64).reshape(-1, N)
    else:
        gray = g.dual()
        matrix = gray.generator.copy()
    witness = DualWitness(prof, gray, matrix)
    primal = [coef.from_gray(r) if coef.kind == "S" else r for r in g.generator]
    for a in matrix:
        for c in primal:
            if euclidean_product(a, c, code.ring):
                raise AssertionError("dual row not orthogonal to the code")
    witness.closure = analysis.verify_closure(witness)
    if not witness.closure:
        raise AssertionError(f"dual is not shift-closed: {witness.closure}")
    m = code.ring.order
    if check_hermitian and all(t % m == 0 for t in prof.blocks):
        gens = [PolyTuple.from_vector(prof, c) for c in primal]
        for a in matrix:
            ta = PolyTuple.from_vector(prof, a)
            for tc in gens:
                if not hermitian_product(ta, tc).is_zero():
                    raise AssertionError("dual row not Hermitian-orthogonal to a code generator")
        witness.hermitian_checked = True
    return witness


def is_self_dual(code: SgqcCode) -> bool:
    g = code.gray_code("full-module")
    dual = dual_code(code, check_hermitian=False).gray
    result = g.k > 0 and g == dual
    if code.ring.is_s:
        N = code.profile.N
        comps = [g.project(range(N)), g.project(range(N, 2 * N))]
        by_parts = all(c.k > 0 and c == c.dual() for c in comps)
        if by_parts != result:
            raise AssertionError("self-duality over S disagrees with its CRT components")
    return result


def bch_bound(code_or_d1, d2: int | None = None, budget: int = analysis.DEFAULT_BUDGET) -> int:
    """min(d1, d2): certified lower bound for (1-v)C1 + vC2."""
    if d2 is not None:
        return min(int(code_or_d1), int(d2))
    g = analysis.gray_image(code_or_d1, "full-module")
    N = g.n // 2
    ds = [analysis.min_distance(c, budget) for c in (g.project(range(N)), g.project(range(N, 2 * N))) if c.k]
    return min(ds)


# -- counting and K_i ----------------------------------------------------------------

def count_1gen_sgqc(profile: BlockProfile, exponents: Sequence | None = None) -> int:
    """Product over the blocks of the skew cyclic code counts."""
    total = 1
    for i, t in enumerate(profile.blocks):
        exps = exponents[i] if exponents is not None else None
        total *= count_skew_cyclic(t, profile.ring, exps)
    return total


def _zero_tail_subcode(g: LinearCodeFq, keep: list, drop: list) -> np.ndarray:
    """Rows of the subcode vanishing on ``drop``, restricted to ``keep``."""
    order = drop + keep
    red, piv = analysis._kernels.rref(g.generator[:, order], g.field) if g.k else (g.generator, [])
    rows = [r[len(drop):] for r, p in zip(red, piv) if p >= len(drop)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(keep))


def _min_degree_generator(rows: np.ndarray, ring: SkewRing, t: int) -> SkewPoly:
    """Monic lowest-degree element of a shift-closed F_q space of length t."""
    if rows.shape[0] == 0:
        return ring.xn_minus_1(t)
    rev = list(range(t - 1, -1, -1))
    red, _ = analysis._kernels.rref(rows[:, rev], ring.field)
    last = red[-1][::-1]
    return ring.poly(int(c) for c in last)


def kset_generators(code: SgqcCode, convention: str = "full-module") -> list:
    """Generators of K_i = {c_i : c in C, c_j = 0 for j > i}, block by block."""
    prof, ring = code.profile, code.ring
    g = code.gray_code(convention)
    N, out = prof.N, []
    comp_ring = ring.component_ring() if ring.is_s else ring
    for i, (o, t) in enumerate(zip(prof.offsets, prof.blocks)):
        tail = list(range(o + t, N))
        keep = list(range(o, o + t))
        if ring.is_s:
            gens = []
            for half in (0, N):
                rows = _zero_tail_subcode(g, [k + half for k in keep],
                                          [k + h for h in (0, N) for k in tail] + [k + (N - half) for k in keep])
                gens.append(_min_degree_generator(rows, comp_ring, t))
            out.append(ring.join(*gens))
        else:
            rows = _zero_tail_subcode(g, keep, tail)
            out.append(_min_degree_generator(rows, ring, t))
    return out


__all__ = [
    "BlockProfile", "PolyTuple", "SgqcCode", "DualWitness", "CONVENTIONS",
    "sigma_l", "module_mul", "annihilator", "annihilator_linear", "build_1gen", "build_rho_gen",
    "combine_crt_sgqc", "split_crt_sgqc", "crt_join_tuples", "hermitian_conjugate",
    "hermitian_product", "dual_code", "is_self_dual", "bch_bound", "count_1gen_sgqc",
    "kset_generators", "factor_xn_minus_1",
]
