"""The auxiliary partition-count families and their cross-checking routes.

Seven families, each indexed by an integer k:

    p   partitions into parts from {2, ..., k}                (k >= 2)
    pp  pairs from the p_k and p_{k+1} families               (k >= 2)
    d   first difference of p: d_k(n) = p_k(n) - p_k(n-1)     (k >= 2)
    t   the nonnegative majorant sum used to bound d          (k >= 4)
    f   first difference of pp                                (k >= 2)
    g   pairs of partitions with at most k parts each         (k >= 0)
    h   pairs with exactly k parts each, the second pair
        member's largest part repeated                        (k >= 1)

Every family has a generating-function route; p (for k = 2, 3, 4) has
closed forms, and g/h have naive recurrences.  The alternate routes exist
to test the series engine, so they must not share code with it.
"""

from __future__ import annotations

from typing import List

from ._backend import kernels
from .errors import InvalidK
from .series import TruncatedSeries, inv_pochhammer, inv_pochhammer_apply

FAMILIES = ("p", "pp", "d", "t", "f", "g", "h")

_MIN_K = {"p": 2, "pp": 2, "d": 2, "t": 4, "f": 2, "g": 0, "h": 1}


def check_k(family: str, k: int) -> None:
    if family not in _MIN_K:
        raise InvalidK(f"unknown family {family!r}")
    if k < _MIN_K[family]:
        raise InvalidK(f"family {family!r} needs k >= {_MIN_K[family]}, got {k}")


def p_series(k: int, order: int) -> TruncatedSeries:
    """1/(q^2; q)_{k-1}: counts partitions into parts from {2..k}.

    Equivalently (by conjugation) partitions with at most k parts whose
    largest part repeats; p_k(0) = 1 and p_k(1) = 0 hold automatically.
    """
    check_k("p", k)
    return inv_pochhammer(2, k - 1, order)


def p_explicit(k: int, n: int) -> int:
    """Closed forms for p_2, p_3, p_4; independent of the series engine."""
    if k not in (2, 3, 4):
        raise InvalidK(f"closed forms exist only for k in {{2, 3, 4}}, got {k}")
    if n < 0:
        return 0
    if k == 2:
        return 1 if n % 2 == 0 else 0
    if k == 3:
        return n // 6 if n % 6 == 1 else n // 6 + 1
    r = n % 12
    if r == 1:
        a = (n - 13) // 12  # the 12a+13 branch; yields 0 at n = 1
        return 3 * a * a + 8 * a + 5
    a = n // 12
    return {
        0: 3 * a * a + 3 * a + 1,
        3: 3 * a * a + 3 * a + 1,
        2: 3 * a * a + 4 * a + 1,
        5: 3 * a * a + 4 * a + 1,
        4: 3 * a * a + 5 * a + 2,
        7: 3 * a * a + 5 * a + 2,
        6: 3 * a * a + 6 * a + 3,
        9: 3 * a * a + 6 * a + 3,
        8: 3 * a * a + 7 * a + 4,
        11: 3 * a * a + 7 * a + 4,
        10: 3 * a * a + 8 * a + 5,
    }[r]


def pp_series(k: int, order: int) -> TruncatedSeries:
    """1/((q^2;q)_{k-1} (q^2;q)_k): pairs drawn from p_k and p_{k+1}."""
    check_k("pp", k)
    s = inv_pochhammer(2, k - 1, order)
    return inv_pochhammer_apply(s, 2, k)


def d_series(k: int, order: int) -> TruncatedSeries:
    """(1-q)/(q^2;q)_{k-1}: coefficientwise p_k(n) - p_k(n-1)."""
    check_k("d", k)
    return p_series(k, order).mul_one_minus_q_pow(1)


def f_series(k: int, order: int) -> TruncatedSeries:
    """(1-q)/((q^2;q)_{k-1}(q^2;q)_k): coefficientwise pp_k(n) - pp_k(n-1)."""
    check_k("f", k)
    return pp_series(k, order).mul_one_minus_q_pow(1)


def t_series(k: int, order: int) -> TruncatedSeries:
    """sum_{j=2}^{k} q^{2j} (1 - q^{k-j+2}) / (q^2;q)_{j-1}."""
    check_k("t", k)
    acc = TruncatedSeries.zero(order)
    for j in range(2, k + 1):
        term = inv_pochhammer(2, j - 1, order)
        term = term.mul_one_minus_q_pow(k - j + 2).shift(2 * j)
        acc = acc + term
    return acc


def g_series(k: int, order: int) -> TruncatedSeries:
    """1/(q;q)_k^2: pairs of partitions with at most k parts each.

    k = 0 is the empty product, i.e. the delta sequence at 0.
    """
    check_k("g", k)
    s = inv_pochhammer(1, k, order)
    return inv_pochhammer_apply(s, 1, k)


def h_series(k: int, order: int) -> TruncatedSeries:
    """q^{2k}/((q;q)_k (q^2;q)_{k-1}) for k >= 2; for k = 1 the convention
    sequence 0, 0, 1, 1, 1, ... (which the k = 1 formula also produces)."""
    check_k("h", k)
    if k == 1:
        coeffs = [0] * (order + 1)
        for n in range(2, order + 1):
            coeffs[n] = 1
        return TruncatedSeries.from_coeffs(coeffs)
    s = inv_pochhammer(1, k, order)
    s = inv_pochhammer_apply(s, 2, k - 1)
    return s.shift(2 * k)


def g_recurrence(k: int, n_max: int) -> List[int]:
    """g_k(0..n_max) via g_k(n) = sum_{i=0}^{n//k} (i+1) g_{k-1}(n - k i),
    seeded with the delta sequence; never touches the series engine."""
    check_k("g", k)
    cur = [1] + [0] * n_max
    for kk in range(1, k + 1):
        cur = kernels.weighted_conv(cur, kk, 0, 0)
    return cur


def h_recurrence(k: int, n_max: int) -> List[int]:
    """h_k(0..n_max) via h_k(n) = sum_{i=0}^{n//k - 2} (i+1) h_{k-1}(n-ki-2),
    seeded with the k = 1 convention sequence."""
    check_k("h", k)
    cur = [0, 0] + [1] * (n_max - 1) if n_max >= 2 else [0] * (n_max + 1)
    for kk in range(2, k + 1):
        cur = kernels.weighted_conv(cur, kk, 2, -2)
    return cur


_SERIES_BUILDERS = {
    "p": p_series,
    "pp": pp_series,
    "d": d_series,
    "t": t_series,
    "f": f_series,
    "g": g_series,
    "h": h_series,
}


def family_series(family: str, k: int, order: int) -> TruncatedSeries:
    """Dispatch to one family's generating-function route by name."""
    check_k(family, k)
    return _SERIES_BUILDERS[family](k, order)
