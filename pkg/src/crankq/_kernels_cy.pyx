# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for the series engine and the rank dynamic program.

Mirrors the API of ``_kernels_py``.  The list-based kernels keep Python int
coefficients (exactness at any size); the rank DP runs on 128-bit machine
integers, which comfortably hold p(n) for every n this package targets.
"""

from cpython.list cimport PyList_GET_ITEM, PyList_GET_SIZE
from libc.stdlib cimport calloc, free

BACKEND_NAME = "cython"

cdef extern from *:
    ctypedef long long i128 "__int128"


def vec_add(list a, list b):
    cdef Py_ssize_t i, n = min(PyList_GET_SIZE(a), PyList_GET_SIZE(b))
    cdef list out = [None] * n
    for i in range(n):
        out[i] = (<object>PyList_GET_ITEM(a, i)) + (<object>PyList_GET_ITEM(b, i))
    return out


def vec_sub(list a, list b):
    cdef Py_ssize_t i, n = min(PyList_GET_SIZE(a), PyList_GET_SIZE(b))
    cdef list out = [None] * n
    for i in range(n):
        out[i] = (<object>PyList_GET_ITEM(a, i)) - (<object>PyList_GET_ITEM(b, i))
    return out


def vec_scale(list a, c):
    cdef Py_ssize_t i, n = PyList_GET_SIZE(a)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = c * (<object>PyList_GET_ITEM(a, i))
    return out


def geom_divide(list c, Py_ssize_t e):
    """In place: divide by (1 - q^e), i.e. c[i] += c[i-e]."""
    cdef Py_ssize_t i, n = PyList_GET_SIZE(c)
    for i in range(e, n):
        c[i] = (<object>PyList_GET_ITEM(c, i)) + (<object>PyList_GET_ITEM(c, i - e))
    return c


def geom_multiply(list c, Py_ssize_t e):
    """In place: multiply by (1 - q^e), i.e. c[i] -= c[i-e], descending."""
    cdef Py_ssize_t i, n = PyList_GET_SIZE(c)
    for i in range(n - 1, e - 1, -1):
        c[i] = (<object>PyList_GET_ITEM(c, i)) - (<object>PyList_GET_ITEM(c, i - e))
    return c


def cauchy_mul(list a, list b, Py_ssize_t n):
    """Truncated Cauchy product; n is the result length (order + 1)."""
    cdef Py_ssize_t i, j, jmax
    cdef Py_ssize_t la = PyList_GET_SIZE(a), lb = PyList_GET_SIZE(b)
    cdef list out = [0] * n
    cdef object ai, bj
    for i in range(min(la, n)):
        ai = <object>PyList_GET_ITEM(a, i)
        if not ai:
            continue
        jmax = lb if lb < n - i else n - i
        for j in range(jmax):
            bj = <object>PyList_GET_ITEM(b, j)
            if bj:
                out[i + j] = (<object>PyList_GET_ITEM(out, i + j)) + ai * bj
    return out


def weighted_conv(list prev, Py_ssize_t k, Py_ssize_t shift, Py_ssize_t imax_offset):
    """out[n] = sum_{i=0}^{n//k + imax_offset} (i+1) * prev[n - k*i - shift]."""
    cdef Py_ssize_t n, i, j, imax, n_len = PyList_GET_SIZE(prev)
    cdef list out = [0] * n_len
    cdef object acc, v
    for n in range(n_len):
        acc = 0
        imax = n // k + imax_offset
        for i in range(imax + 1):
            j = n - k * i - shift
            if j < 0:
                break
            v = <object>PyList_GET_ITEM(prev, j)
            if v:
                acc = acc + (i + 1) * v
        out[n] = acc
    return out


cdef object _i128_to_pyint(i128 v):
    cdef unsigned long long lo, hi
    lo = <unsigned long long>(v & <i128>0xFFFFFFFFFFFFFFFFULL)
    hi = <unsigned long long>(v >> 64)
    if hi:
        return (int(hi) << 64) + int(lo)
    return int(lo)


def rank_dp(Py_ssize_t n_max):
    """Joint-count dynamic program for the rank distribution.

    Counts partitions by (largest part a, number of parts b) via prefix
    sums over layers of b, accumulating over m = a - b.  Returns
    rows[n] = counts for m = -(n-1) .. n-1 (row 0 is [1]).
    """
    cdef Py_ssize_t size = n_max + 1
    cdef Py_ssize_t n, a, b, j, amax, off
    cdef i128 t, run
    cdef i128 *cprev
    cdef i128 *ccur
    cdef i128 *acc
    cdef i128 *tmp

    rows = [[1]]
    for n in range(1, size):
        rows.append([0] * (2 * n - 1))
    if n_max < 1:
        return rows

    cprev = <i128 *>calloc(size * size, sizeof(i128))
    ccur = <i128 *>calloc(size * size, sizeof(i128))
    # acc[n*(2*n_max+1) + (m + n_max)] would be wasteful; store per-n row of
    # length 2n-1 packed sequentially.
    cdef Py_ssize_t total = 1
    for n in range(1, size):
        total += 2 * n - 1
    acc = <i128 *>calloc(total, sizeof(i128))
    if cprev == NULL or ccur == NULL or acc == NULL:
        free(cprev); free(ccur); free(acc)
        raise MemoryError()

    cdef Py_ssize_t *row_base = <Py_ssize_t *>calloc(size, sizeof(Py_ssize_t))
    if row_base == NULL:
        free(cprev); free(ccur); free(acc)
        raise MemoryError()
    row_base[0] = 0
    for n in range(1, size):
        row_base[n] = row_base[n - 1] + (1 if n == 1 else 2 * (n - 1) - 1)

    try:
        # layer b = 1
        for j in range(1, size):
            for a in range(j, size):
                cprev[j * size + a] = 1
            acc[row_base[j] + 2 * (j - 1)] += 1  # m = n - 1

        for b in range(2, size):
            # rows n < b of ccur go stale but are never read back: layer
            # b+1 only looks at j = n - a >= b.  Cells a >= 1 of live rows
            # are all rewritten below, including the run==0 tail.
            for n in range(b, size):
                off = row_base[n] + (n - 1 - b)
                run = 0
                amax = n - b + 1
                for a in range(1, amax + 1):
                    j = n - a
                    t = cprev[j * size + (a if a <= j else j)]
                    if t:
                        acc[off + a] += t
                        run += t
                    ccur[n * size + a] = run
                for a in range(amax + 1, size):
                    ccur[n * size + a] = run
            tmp = cprev; cprev = ccur; ccur = tmp

        for n in range(1, size):
            row = rows[n]
            off = row_base[n]
            for a in range(2 * n - 1):
                t = acc[off + a]
                if t:
                    row[a] = _i128_to_pyint(t)
    finally:
        free(cprev)
        free(ccur)
        free(acc)
        free(row_base)
    return rows
