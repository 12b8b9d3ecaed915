"""Hot loops: row reduction over F_q and minimum-weight enumeration.

Each kernel has a numba version and a pure-numpy version.  Numba is used
when it imports and ``SKEWGQC_NO_NUMBA`` is unset (or "0"); otherwise the
numpy code runs.  Both operate on integer codes with the field's lookup
tables, so they work for any F_q the package supports.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


def numba_enabled() -> bool:
    return _HAVE_NUMBA and os.environ.get("SKEWGQC_NO_NUMBA", "0") in ("", "0")


def _tables(field):
    return field.add_table, field.sub_table, field.mul_table, field.inv_table


# -- row reduction ------------------------------------------------------------

@njit(cache=True, nogil=True)
def _rref_nb(M, add, sub, mul, inv):
    A = M.copy()
    rows, cols = A.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = tmp
        s = inv[A[r, c]]
        for j in range(cols):
            A[r, j] = mul[s, A[r, j]]
        for i in range(rows):
            f = A[i, c]
            if i != r and f != 0:
                for j in range(c, cols):
                    A[i, j] = sub[A[i, j], mul[f, A[r, j]]]
        pivots[r] = c
        r += 1
    return A[:r].copy(), pivots[:r].copy()


def _rref_np(M, add, sub, mul, inv):
    A = np.array(M, dtype=np.int64, copy=True)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = mul[inv[A[r, c]], A[r]]
        f = A[:, c].copy()
        f[r] = 0
        A = sub[A, mul[f[:, None], A[r][None, :]]]
        pivots.append(c)
        r += 1
    return A[:r], np.asarray(pivots, dtype=np.int64)


def rref(M, field, use_numba: bool | None = None):
    """Reduced row echelon form over F_q: returns (rows of rank r, pivot columns)."""
    M = np.ascontiguousarray(np.asarray(M, dtype=np.int64))
    if M.ndim != 2:
        raise ValueError("rref expects a 2-D array")
    if M.shape[0] == 0:
        return M.reshape(0, M.shape[1]), np.zeros(0, dtype=np.int64)
    use = numba_enabled() if use_numba is None else use_numba
    fn = _rref_nb if use else _rref_np
    return fn(M, *_tables(field))


# -- minimum weight -------------------------------------------------------------

def projective_count(k: int, q: int) -> int:
    """Number of codewords with leading nonzero coefficient 1."""
    return (q ** k - 1) // (q - 1) if k else 0


@njit(cache=True, nogil=True)
def _minwt_block_nb(G, p, q, add, sub, mul, best):
    # rows p+1.. run through a reflected q-ary Gray code; row p has coefficient 1
    k, n = G.shape
    r = k - p - 1
    scaled = np.empty((max(r, 1), q, n), dtype=np.int64)
    for j in range(r):
        for d in range(q):
            for c in range(n):
                scaled[j, d, c] = mul[d, G[p + 1 + j, c]]
    word = G[p].copy()
    w = 0
    for c in range(n):
        if word[c] != 0:
            w += 1
    if w < best:
        best = w
    digits = np.zeros(max(r, 1), dtype=np.int64)
    direction = np.ones(max(r, 1), dtype=np.int64)
    while best > 1:
        j = 0
        while j < r:
            nv = digits[j] + direction[j]
            if nv >= 0 and nv < q:
                break
            direction[j] = -direction[j]
            j += 1
        if j == r:
            break
        old = digits[j]
        nv = old + direction[j]
        digits[j] = nv
        delta = sub[nv, old]
        w = 0
        for c in range(n):
            x = add[word[c], scaled[j, delta, c]]
            word[c] = x
            if x != 0:
                w += 1
        if w < best:
            best = w
    return best


def _minwt_block_np(G, p, q, add, sub, mul, best, chunk=1 << 15):
    k, n = G.shape
    r = k - p - 1
    rest = G[p + 1:]
    total = q ** r
    powers = q ** np.arange(r, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        word = np.broadcast_to(G[p], (idx.size, n)).copy()
        for j in range(r):
            coef = (idx // powers[j]) % q
            word = add[word, mul[coef[:, None], rest[j][None, :]]]
        w = int(np.count_nonzero(word, axis=1).min())
        if w < best:
            best = w
        if best <= 1:
            break
    return best


def min_weight(G, field, pivots=None, use_numba: bool | None = None) -> int:
    """Minimum Hamming weight of the nonzero codewords spanned by the rows of G.

    G must have independent rows (e.g. the output of :func:`rref`).  Only
    codewords whose first nonzero coefficient is 1 are visited, since
    scalar multiples share a weight.  ``pivots`` restricts the leading row
    positions visited, so disjoint position sets can be run in parallel
    and the minima combined.
    """
    G = np.ascontiguousarray(np.asarray(G, dtype=np.int64))
    k, n = G.shape
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    add, sub, mul, _ = _tables(field)
    use = numba_enabled() if use_numba is None else use_numba
    block = _minwt_block_nb if use else _minwt_block_np
    best = n + 1
    for p in (range(k) if pivots is None else pivots):
        best = int(block(G, int(p), field.q, add, sub, mul, best))
        if best <= 1:
            break
    return best


def weight_distribution(G, field) -> np.ndarray:
    """Full weight enumerator A_0..A_n by exhaustive span (small codes only)."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    q = field.q
    add, mul = field.add_table, field.mul_table
    counts = np.zeros(n + 1, dtype=np.int64)
    powers = q ** np.arange(k, dtype=np.int64)
    total = q ** k
    for start in range(0, total, 1 << 15):
        idx = np.arange(start, min(start + (1 << 15), total), dtype=np.int64)
        word = np.zeros((idx.size, n), dtype=np.int64)
        for j in range(k):
            coef = (idx // powers[j]) % q
            word = add[word, mul[coef[:, None], G[j][None, :]]]
        counts += np.bincount(np.count_nonzero(word, axis=1), minlength=n + 1)
    return counts
