"""Acceptance gate: one test per criterion, each recording a pass/fail line.

The summary lines are printed at the end of the pytest run.
"""
import itertools
import math
import time

import numpy as np
import pytest

from skewgqc import (BlockProfile, build_1gen, FieldSpec, PolyTuple, SkewRing, build_skew_cyclic, combine_crt_codes,
                     combine_crt_sgqc, component_distance_reduction, count_skew_cyclic, dual_code, gcrd,
                     hermitian_product, is_idempotent, lclm, left_divide, min_distance, right_divide,
                     right_divide_recurrence, sigma_l, verify_closure)
from skewgqc.cli import golden_code, reproduce_row, verify_identities
from skewgqc.errors import BudgetExceededError
from skewgqc.golden import COMBINED, EXAMPLES, IDEMPOTENTS, TABLES, all_cases
from skewgqc.ring_s import SRing, crt_join, crt_split
from skewgqc.sgqc import euclidean_product, split_crt_sgqc
from skewgqc.skew_cyclic import count_skew_cyclic_oracle, split_crt_code
from skewgqc.skew_poly import enumerate_right_divisors

from conftest import ACCEPTANCE, RINGS

CASES = all_cases()


class Criterion:
    def __init__(self, key, limit):
        self.key, self.limit = key, limit
        self.failures = []
        self.notes = []

    def check(self, ok, message):
        if not ok:
            self.failures.append(message)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc is not None:
            self.failures.append(f"error: {exc_type.__name__}: {exc}")
        if elapsed > self.limit:
            self.failures.append(f"took {elapsed:.1f}s, limit {self.limit}s")
        detail = "; ".join(self.failures + self.notes) or "all checks hold"
        ACCEPTANCE[self.key] = (not self.failures, detail, elapsed)
        if exc is None:
            assert not self.failures, detail
        return False


def test_criterion_1_factorization_identities():
    with Criterion(1, 1.0) as c:
        for ident, ok, prim, prod in verify_identities():
            c.check(ok, f"{ident.ident} fails: product is {prod}")
            if ok and prim is not None:
                c.notes.append(f"{ident.ident} holds with primitive element code {prim}")
        c.notes.append("F_9 identities hold under the default modulus")


def test_criterion_2_example_1():
    case = CASES["example-1"]
    with Criterion(2, 1.0) as c:
        ring = SkewRing.over(FieldSpec(2, 2), "S", 1)
        c.check(lclm(ring.parse("x^2+1"), ring.parse("x^3+1")) == ring.parse("x^4+x^3+x+1"), "lclm")
        code = golden_code(case)
        c.check(code.parity_check.deg == 4, "dimension")
        c.check(code.generator_matrix().tolist() == [list(r) for r in case.matrix],
                f"matrix {code.generator_matrix().tolist()}")
        c.check(code.params("paper-table").params == (20, 4, 8), "Gray parameters")


def test_criterion_3_example_2():
    case = CASES["example-2"]
    with Criterion(3, 1.0) as c:
        code = golden_code(case)
        c.check(str(code.parity_check) == "x^2+1", f"parity check {code.parity_check}")
        c.check(code.parity_check.deg == 2, "dimension")
        got = code.generator_matrix().tolist()
        c.check(got == [list(r) for r in case.matrix],
                f"generator matrix {got} differs from the printed one")
        c.check(code.params("paper-table").params == (24, 2, 12), "Gray parameters")


def test_criterion_4_idempotent_examples():
    with Criterion(4, 1.0) as c:
        for (p, d), n, text in IDEMPOTENTS:
            ring = SkewRing.over(FieldSpec(p, d), "Fq", 1)
            c.check(is_idempotent(ring.parse(text), n), f"{text} mod x^{n}-1 not idempotent")
        for ident, f, params in (("example-6", "x+1", (8, 1, 8)), ("example-7", "x^4+x^3+x^2+1", (15, 4, 4))):
            code = golden_code(CASES[ident])
            c.check(str(code.parity_check) == f, f"{ident} parity check {code.parity_check}")
            c.check(code.params("paper-table").params == params, f"{ident} parameters")


def test_criterion_5_combined_codes():
    with Criterion(5, 120.0) as c:
        for name, (c1, c2, params) in COMBINED.items():
            a, b = golden_code(CASES[c1]), golden_code(CASES[c2])
            for case, code in ((CASES[c1], a), (CASES[c2], b)):
                got = code.params("paper-table").params
                c.check(got == case.expected, f"{case.ident}: {got}")
            both = combine_crt_sgqc(a, b)
            res = component_distance_reduction(both, "full-module")
            c.check((2 * both.profile.N, res.k, res.d) == params, f"{name}: reduction gave k={res.k}, d={res.d}")
            if a.field.q == 4:
                c.check(res.cross_checked, f"{name}: direct enumeration skipped")
                direct = min_distance(both.gray_code("full-module"))
                c.check(direct == params[2], f"{name}: direct enumeration gave {direct}")


def test_criterion_6_tables():
    # every transcribed row currently matches under at least one convention
    matching = {c.ident for rows in TABLES.values() for c in rows}
    required = {"table2-row3", "table2-row4"} | {c.ident for c in TABLES[3] if c.expected[1] <= 8}
    with Criterion(6, 300.0) as c:
        matched = set()
        for rows in TABLES.values():
            for case in rows:
                r = reproduce_row(case, 10 ** 8)
                if r["match"]:
                    matched.add(case.ident)
                else:
                    c.notes.append(f"{case.ident} expected {case.expected}: " + ", ".join(
                        f"{k} {v}" for k, v in r["conventions"].items()))
        c.check(required <= matched, f"required rows missing: {sorted(required - matched)}")
        c.check(matching <= matched, f"regressed rows: {sorted(matching - matched)}")
        c.notes.append(f"{len(matched)}/{sum(len(r) for r in TABLES.values())} rows match")


def _random_poly(ring, rng, max_deg, unit_lead=False):
    size = ring.field.q ** 2 if ring.is_s else ring.field.q
    deg = int(rng.integers(0 if unit_lead else -1, max_deg + 1))
    if deg < 0:
        return ring.zero
    coeffs = rng.integers(0, size, deg + 1).tolist()
    if unit_lead:
        units = [u for u in range(1, size) if ring.coef.is_unit(u)]
        coeffs[-1] = int(rng.choice(units))
    return ring.poly(coeffs)


def _span(rows, F):
    out = []
    for coeffs in itertools.product(range(F.q), repeat=len(rows)):
        acc = np.zeros(rows.shape[1], dtype=np.int64)
        for a, r in zip(coeffs, rows):
            acc = F.add_table[acc, F.mul_table[a, r]]
        out.append(acc)
    return out


def test_criterion_7_property_suites():
    rng = np.random.default_rng(2024)
    with Criterion(7, 300.0) as c:
        # division reconstruction and remainder bounds
        for name in ("F4", "F9", "S4"):
            ring = RINGS[name]
            for _ in range(1000):
                a, b = _random_poly(ring, rng, 8), _random_poly(ring, rng, 5, unit_lead=True)
                q, r = right_divide(a, b)
                ql, rl = left_divide(a, b)
                c.check(q * b + r == a and r.deg < b.deg, f"right division {a} / {b}")
                c.check(b * ql + rl == a and rl.deg < b.deg, f"left division {a} / {b}")
                c.check(right_divide_recurrence(a, b) == right_divide(a, b), f"division routes {a} / {b}")
        # gcrd/lclm degree identity over F_q
        for name in ("F4", "F9"):
            ring = RINGS[name]
            for _ in range(1000):
                a, b = _random_poly(ring, rng, 5, True), _random_poly(ring, rng, 5, True)
                c.check(gcrd(a, b).deg + lclm(a, b).deg == a.deg + b.deg, f"degree identity {a}, {b}")
        # Gray isometry, exhaustive
        for F in (FieldSpec(3, 1), FieldSpec(2, 2), FieldSpec(3, 2)):
            S = SRing(F)
            xs, ys = np.meshgrid(np.arange(F.q ** 2), np.arange(F.q ** 2))
            x, y = xs.ravel(), ys.ravel()
            gx, gy = S.gray(x), S.gray(y)
            lin = np.array_equal(S.gray(S.vadd(x, y)), F.add_table[gx, gy])
            n = x.size
            lee = np.count_nonzero(S.gray(S.vsub(x, y)).reshape(2, n), axis=0)
            ham = np.count_nonzero((gx != gy).reshape(2, n), axis=0)
            bij = len({tuple(S.gray(np.array([s]))) for s in range(F.q ** 2)}) == F.q ** 2
            c.check(lin and bij and np.array_equal(lee, ham), f"Gray isometry over q={F.q}")
        # Hermitian product vs shift orthogonality, exhaustive within spans of dimension <= 3
        ring = RINGS["F4"]
        prof = BlockProfile((2, 4), ring)
        for seed in range(12):
            dim = 1 + seed % 3
            basis = np.random.default_rng(seed).integers(0, 4, (dim, prof.N))
            words = _span(basis, ring.field)
            tuples = [PolyTuple.from_vector(prof, w) for w in words]
            orbits = []
            for w in words:
                orbit, cur = [], w
                for _ in range(prof.M):
                    orbit.append(cur)
                    cur = sigma_l(cur, prof)
                orbits.append(orbit)
            for (u, tu), (orb, tv) in itertools.product(zip(words, tuples), zip(orbits, tuples)):
                shift_orth = all(euclidean_product(u, s, ring) == 0 for s in orb)
                c.check(hermitian_product(tu, tv).is_zero() == shift_orth, f"Hermitian equivalence at {u}")
        # shift closure of every constructed code and every computed dual
        for case in all_cases().values():
            code = golden_code(case)
            c.check(bool(verify_closure(code, "full-module")), f"{case.ident} not closed")
            c.check(bool(dual_code(code).closure), f"dual of {case.ident} not closed")
        # counting formula against enumeration
        checked = 0
        for p, d in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4)]:
            F = FieldSpec(p, d)
            for t, kind in itertools.product(range(d), ("Fq", "S")):
                ring = SkewRing.over(F, kind, t)
                for n in range(1, 16):
                    if sum(F.q ** k for k in range(n + 1)) > 10 ** 5:
                        break
                    if math.gcd(n, ring.order) != 1:
                        continue
                    f, o = count_skew_cyclic(n, ring), count_skew_cyclic_oracle(n, ring)
                    c.check(f == o, f"count n={n} q={F.q} {kind} t={t}: formula {f}, enumeration {o}")
                    checked += 1
        c.notes.append(f"{checked} counting cases")


def test_criterion_8_crt_round_trips():
    with Criterion(8, 60.0) as c:
        for F in (FieldSpec(3, 1), FieldSpec(2, 2)):
            S = SRing(F)
            words = np.array(list(itertools.product(range(F.q ** 2), repeat=2)))
            a, b = crt_split(words, S)
            c.check(np.array_equal(crt_join(a, b, S), words), f"join(split) on S^2, q={F.q}")
            pairs = np.array(list(itertools.product(range(F.q), repeat=2)))
            for u in pairs:
                j = crt_join(np.tile(u, (len(pairs), 1)), pairs, S)
                x, y = crt_split(j, S)
                c.check(np.array_equal(x, np.tile(u, (len(pairs), 1))) and np.array_equal(y, pairs),
                        f"split(join) on F_{F.q}^2")
        ring = RINGS["F4"]
        n = 3
        divs = [g for k in range(n + 1) for g in enumerate_right_divisors(n, k, ring)]
        codes = [build_skew_cyclic(n, g) for g in divs]
        for c1, c2 in itertools.product(codes, repeat=2):
            joined = combine_crt_codes(c1, c2)
            x, y = split_crt_code(joined)
            c.check(x.same_code(c1) and y.same_code(c2), f"split(join) on codes {c1.gen}, {c2.gen}")
            again = combine_crt_codes(x, y)
            c.check(again.same_code(joined), f"join(split) on code {joined.gen}")
        prof = BlockProfile((1, 3), ring)
        rng = np.random.default_rng(8)
        for _ in range(50):
            e1 = PolyTuple.from_vector(prof, rng.integers(0, 4, prof.N))
            e2 = PolyTuple.from_vector(prof, rng.integers(0, 4, prof.N))
            a, b = build_1gen(prof, e1), build_1gen(prof, e2)
            both = combine_crt_sgqc(a, b)
            x, y = split_crt_sgqc(both)
            c.check(x.gray_code("full-module") == a.gray_code("full-module")
                    and y.gray_code("full-module") == b.gray_code("full-module"), "SGQC split(join)")
