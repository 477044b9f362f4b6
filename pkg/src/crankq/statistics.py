"""Production paths for M(m,n), N(m,n), p(n) and the ospt function.

Crank counts come from the classical single-variable generating function

    sum_n M(m,n) q^n = (1-q) q^m / (q;q)_m
                       + sum_{k>=1} q^{k(k+m)+2k+m} / ((q;q)_k (q^2;q)_{k+m-1})

for m >= 0, with negative m filled in by the symmetry M(m,n) = M(-m,n).
The k-sum is truncated once the leading exponent k(k+m)+2k+m passes the
order; the n = 1 convention row (-1, 1), (0, -1), (1, 1) falls out of the
series without any special-casing.

Rank counts delegate to the joint-count DP in :mod:`crankq.enumeration`.
"""

from __future__ import annotations

from typing import List

from . import enumeration
from .series import TruncatedSeries, inv_pochhammer, inv_pochhammer_apply
from .tables import CumulativeTable, DistributionTable, cumulative


def crank_gf(m: int, order: int) -> TruncatedSeries:
    """The series whose q^n coefficient is the count of partitions of n
    with crank m (m >= 0)."""
    if m < 0:
        raise ValueError("crank_gf takes m >= 0; use symmetry for m < 0")
    t = inv_pochhammer(1, m, order).shift(m)
    g = t.mul_one_minus_q_pow(1)
    k = 1
    while k * (k + m) + 2 * k + m <= order:
        g = g + _crank_sum_term(k, m, order)
        k += 1
    return g


def _crank_sum_term(k: int, m: int, order: int) -> TruncatedSeries:
    t = inv_pochhammer(1, k, order)
    t = inv_pochhammer_apply(t, 2, k + m - 1)
    return t.shift(k * (k + m) + 2 * k + m)


def crank_table(n_max: int) -> DistributionTable:
    """M(m,n) for all 0 <= n <= n_max and |m| <= n.

    Evaluates the same generating function as :func:`crank_gf` for every
    m, but incrementally: each factor that changes between m-1 and m costs
    one geometric division, so the full table is O(n_max^2) coefficient
    updates instead of O(n_max^3).  Negative m is mirrored, never computed.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    order = n_max
    # base = q^m / (q;q)_m, stepped by base *= q / (1 - q^m)
    base = TruncatedSeries.constant(1, order)
    # ksum[k] = q^{k(k+m)+2k+m} / ((q;q)_k (q^2;q)_{k+m-1}), stepped by
    # ksum[k] *= q^{k+1} / (1 - q^{k+m})
    ksum = {}
    nonneg_rows: List[List[int]] = []
    for m in range(n_max + 1):
        if m > 0:
            base = base.shift(1).div_one_minus_q_pow(m)
        g = base.mul_one_minus_q_pow(1)
        k = 1
        while k * (k + m) + 2 * k + m <= order:
            if k in ksum:
                ksum[k] = ksum[k].shift(k + 1).div_one_minus_q_pow(k + m)
            else:
                ksum[k] = _crank_sum_term(k, m, order)
            g = g + ksum[k]
            k += 1
        for stale in [kk for kk in ksum if kk >= k]:
            del ksum[stale]
        nonneg_rows.append(g.coeffs())

    rows: List[List[int]] = []
    min_m: List[int] = []
    for n in range(n_max + 1):
        right = [nonneg_rows[m][n] for m in range(0, n + 1)]
        rows.append(right[:0:-1] + right)
        min_m.append(-n)
    return DistributionTable(stat="crank", n_max=n_max, min_m=min_m, rows=rows)


def rank_table(n_max: int) -> DistributionTable:
    """N(m,n) for all 0 <= n <= n_max, from the joint-count DP."""
    return enumeration.rank_distribution_dp(n_max)


def partition_numbers(n_max: int) -> List[int]:
    """p(0..n_max) by dividing 1 by every (1 - q^j), j = 1..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    s = TruncatedSeries.constant(1, n_max)
    for j in range(1, n_max + 1):
        s = s.div_one_minus_q_pow(j)
    return s.coeffs()


def positive_moment(table: DistributionTable, n: int) -> int:
    """sum_{m >= 1} m * counts[m, n] for one row."""
    lo = table.min_m[n]
    row = table.rows[n]
    start = max(1 - lo, 0)
    return sum((lo + i) * c for i, c in enumerate(row[start:], start=start))


def ospt(
    n_max: int,
    cranks: DistributionTable | None = None,
    ranks: DistributionTable | None = None,
) -> List[int]:
    """ospt(n) for 1 <= n <= n_max: first positive crank moment minus first
    positive rank moment.  Index 0 of the result is 0 by convention.

    Precomputed tables covering n_max may be passed to avoid rebuilding.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if cranks is None:
        cranks = crank_table(n_max)
    if ranks is None:
        ranks = rank_table(n_max)
    if cranks.n_max < n_max or ranks.n_max < n_max:
        raise ValueError("supplied tables do not cover n_max")
    out = [0]
    for n in range(1, n_max + 1):
        out.append(positive_moment(cranks, n) - positive_moment(ranks, n))
    return out


__all__ = [
    "crank_gf",
    "crank_table",
    "rank_table",
    "partition_numbers",
    "positive_moment",
    "ospt",
    "cumulative",
    "DistributionTable",
    "CumulativeTable",
]
