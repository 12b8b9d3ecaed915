"""Compare the numba kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Runs row reduction and minimum-weight enumeration on the Gray images of a
few reference codes, checks both back ends agree, and prints timings.
Numba compile time is excluded by a warm-up call.
"""
import argparse
import time

import numpy as np

from skewgqc import _kernels
from skewgqc.cli import golden_code
from skewgqc.golden import COMBINED, all_cases
from skewgqc.sgqc import combine_crt_sgqc


def reference_codes():
    cases = all_cases()
    yield "example-1 full-module", golden_code(cases["example-1"]).gray_code("full-module")
    yield "table3-row5 paper-table", golden_code(cases["table3-row5"]).gray_code("paper-table")
    c1, c2, _ = COMBINED["example-4"]
    combined = combine_crt_sgqc(golden_code(cases[c1]), golden_code(cases[c2]))
    yield "example-4 combined", combined.gray_code("paper-table")


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return out, best


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels._HAVE_NUMBA:
        print("numba is not importable; only the numpy path is available")
        return
    print(f"{'code':28s} {'q':>3s} {'n':>4s} {'k':>3s} {'kernel':>8s} {'numba s':>9s} {'numpy s':>9s} {'speedup':>8s}")
    for name, code in reference_codes():
        F, G = code.field, code.generator
        # warm-up compiles the jitted functions
        _kernels.rref(G, F, use_numba=True)
        _kernels.min_weight(G[:1], F, use_numba=True)
        raw = np.vstack([G, G[::-1]])
        for kernel, fn in (("rref", lambda u: _kernels.rref(raw, F, use_numba=u)[0]),
                           ("minwt", lambda u: _kernels.min_weight(G, F, use_numba=u))):
            a, tn = timed(lambda: fn(True), args.repeat)
            b, tp = timed(lambda: fn(False), args.repeat)
            assert np.array_equal(np.asarray(a), np.asarray(b)), f"{name}/{kernel}: back ends disagree"
            print(f"{name:28s} {F.q:3d} {code.n:4d} {code.k:3d} {kernel:>8s} {tn:9.4f} {tp:9.4f} {tp / tn:8.1f}x")


if __name__ == "__main__":
    main()
