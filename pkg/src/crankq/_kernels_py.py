"""Pure-Python reference kernels.

Same API as the compiled module ``_kernels_cy``; used as the fallback when
the extension is unavailable (or when CRANKQ_PURE_PYTHON=1 is set).  All
arithmetic is on built-in ints, so results are exact at any size.
"""

from __future__ import annotations

BACKEND_NAME = "python"


def vec_add(a: list, b: list) -> list:
    n = min(len(a), len(b))
    return [a[i] + b[i] for i in range(n)]


def vec_sub(a: list, b: list) -> list:
    n = min(len(a), len(b))
    return [a[i] - b[i] for i in range(n)]


def vec_scale(a: list, c: int) -> list:
    return [c * x for x in a]


def geom_divide(c: list, e: int) -> list:
    """In place: divide by (1 - q^e), i.e. c[i] += c[i-e]."""
    for i in range(e, len(c)):
        c[i] += c[i - e]
    return c


def geom_multiply(c: list, e: int) -> list:
    """In place: multiply by (1 - q^e), i.e. c[i] -= c[i-e], descending."""
    for i in range(len(c) - 1, e - 1, -1):
        c[i] -= c[i - e]
    return c


def cauchy_mul(a: list, b: list, n: int) -> list:
    """Truncated Cauchy product; n is the result length (order + 1)."""
    out = [0] * n
    for i, ai in enumerate(a):
        if i >= n:
            break
        if ai == 0:
            continue
        jmax = min(len(b), n - i)
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def weighted_conv(prev: list, k: int, shift: int, imax_offset: int) -> list:
    """out[n] = sum_{i=0}^{n//k + imax_offset} (i+1) * prev[n - k*i - shift].

    Naive evaluation of the (i+1)-weighted convolution used by the
    pair-counting recurrences; deliberately independent of the series
    engine so the two routes cross-check each other.
    """
    n_len = len(prev)
    out = [0] * n_len
    for n in range(n_len):
        acc = 0
        imax = n // k + imax_offset
        for i in range(imax + 1):
            j = n - k * i - shift
            if j < 0:
                break
            v = prev[j]
            if v:
                acc += (i + 1) * v
        out[n] = acc
    return out


def rank_dp(n_max: int) -> list:
    """Joint-count dynamic program for the rank distribution.

    Counts partitions by (largest part a, number of parts b) and
    accumulates over m = a - b.  Layer b is derived from layer b-1 through
    the prefix sums C(j, a) = #{partitions of j, largest part <= a, exactly
    b-1 parts}, so each cell costs O(1).

    Returns rows[n] = counts for m = -(n-1) .. n-1 (row 0 is [1] by the
    empty-partition convention).
    """
    rows = [[1]]
    for n in range(1, n_max + 1):
        rows.append([0] * (2 * n - 1))
    if n_max < 1:
        return rows

    size = n_max + 1
    # layer b = 1: C(j, a) = 1 iff 1 <= j <= a; T(n, a, 1) = 1 iff a == n
    cprev = [[0] * size for _ in range(size)]
    for j in range(1, size):
        cprev[j][j:] = [1] * (size - j)
        rows[j][(j - 1) + (j - 1)] += 1  # m = n - 1 at offset n - 1

    for b in range(2, n_max + 1):
        ccur = [[0] * size for _ in range(size)]
        for n in range(b, size):
            crow = ccur[n]
            nrow = rows[n]
            off = n - 1 - b
            run = 0
            amax = n - b + 1  # need n - a >= b - 1 parts' worth of weight
            for a in range(1, amax + 1):
                j = n - a
                t = cprev[j][a if a <= j else j]
                if t:
                    nrow[a + off] += t
                    run += t
                crow[a] = run
            if run:
                crow[amax + 1:] = [run] * (size - amax - 1)
        cprev = ccur
    return rows
