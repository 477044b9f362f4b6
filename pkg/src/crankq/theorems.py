"""Exhaustive inequality scans with machine-readable reports.

Each registered theorem id maps to a scan over its quantifier range.  The
default n-range starts at the threshold from which the statement is
claimed to hold; callers may widen it (e.g. to locate the empirical
threshold) or narrow it.  Every comparison is exact integer arithmetic;
rational bounds are cross-multiplied, never floated.

Theorem ids are stable public strings consumed by the CLI and the
acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from . import families, statistics
from .errors import RangeError, UnknownTheorem
from .tables import CumulativeTable, DistributionTable, cumulative


def _holds(lhs: int, op: str, rhs: int) -> bool:
    # single comparison funnel; tests falsify this to prove the harness
    # cannot pass vacuously
    if op == ">=":
        return lhs >= rhs
    if op == ">":
        return lhs > rhs
    if op == "<=":
        return lhs <= rhs
    if op == "<":
        return lhs < rhs
    if op == "==":
        return lhs == rhs
    raise ValueError(f"unknown comparison {op!r}")


@dataclass(frozen=True)
class Violation:
    point: Dict[str, object]
    lhs: int
    rhs: int

    def as_dict(self) -> dict:
        return {"point": dict(self.point), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    theorem_id: str
    n_from: int
    n_to: int
    params: Dict[str, int]
    checked: int
    violations: List[Violation]
    stated_n_from: int

    @property
    def status(self) -> str:
        return "pass" if not self.violations else "fail"

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "id": self.theorem_id,
            "params": dict(self.params),
            "range": {
                "n_from": self.n_from,
                "n_to": self.n_to,
                "stated_n_from": self.stated_n_from,
            },
            "checked": self.checked,
            "violations": [v.as_dict() for v in self.violations],
            "status": self.status,
        }


class _Recorder:
    __slots__ = ("checked", "violations")

    def __init__(self):
        self.checked = 0
        self.violations: List[Violation] = []

    def check(self, point: Dict[str, object], lhs: int, op: str, rhs: int) -> None:
        self.checked += 1
        if not _holds(lhs, op, rhs):
            self.violations.append(Violation(point, lhs, rhs))


class VerifyContext:
    """Caches the tables and series shared by the theorem scans.

    Each cache keeps the largest object computed so far; requests covered
    by it are served from the cache, larger requests replace it.
    """

    def __init__(self):
        self._cranks: Optional[DistributionTable] = None
        self._ranks: Optional[DistributionTable] = None
        self._crank_cum: Optional[CumulativeTable] = None
        self._rank_cum: Optional[CumulativeTable] = None
        self._pvec: List[int] = []
        self._ospt: List[int] = []
        self._crank_m0: List[int] = []
        self._fam: Dict[tuple, List[int]] = {}

    def cranks(self, n_max: int) -> DistributionTable:
        if self._cranks is None or self._cranks.n_max < n_max:
            self._cranks = statistics.crank_table(n_max)
            self._crank_cum = None
        return self._cranks

    def ranks(self, n_max: int) -> DistributionTable:
        if self._ranks is None or self._ranks.n_max < n_max:
            self._ranks = statistics.rank_table(n_max)
            self._rank_cum = None
        return self._ranks

    def crank_cum(self, n_max: int) -> CumulativeTable:
        t = self.cranks(n_max)
        if self._crank_cum is None or self._crank_cum.n_max < n_max:
            self._crank_cum = cumulative(t)
        return self._crank_cum

    def rank_cum(self, n_max: int) -> CumulativeTable:
        t = self.ranks(n_max)
        if self._rank_cum is None or self._rank_cum.n_max < n_max:
            self._rank_cum = cumulative(t)
        return self._rank_cum

    def pvec(self, n_max: int) -> List[int]:
        if len(self._pvec) <= n_max:
            self._pvec = statistics.partition_numbers(n_max)
        return self._pvec

    def ospt(self, n_max: int) -> List[int]:
        if len(self._ospt) <= n_max:
            self._ospt = statistics.ospt(
                n_max, cranks=self.cranks(n_max), ranks=self.ranks(n_max)
            )
        return self._ospt

    def crank_m0(self, n_max: int) -> List[int]:
        """M(0, 0..n_max) without building the full table."""
        if len(self._crank_m0) <= n_max:
            self._crank_m0 = statistics.crank_gf(0, n_max).coeffs()
        return self._crank_m0

    def fam(self, family: str, k: int, order: int) -> List[int]:
        key = (family, k)
        cur = self._fam.get(key)
        if cur is None or len(cur) <= order:
            cur = families.family_series(family, k, order).coeffs()
            self._fam[key] = cur
        return cur


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    description: str
    stated_n_from: int
    n_base: int  # smallest n the scan may start from (threshold searches)
    run: Callable[..., None]
    defaults: Dict[str, int] = field(default_factory=dict)


REGISTRY: Dict[str, TheoremSpec] = {}


def _register(spec: TheoremSpec) -> None:
    REGISTRY[spec.id] = spec


# --------------------------------------------------------------------------
# rank inequalities
# --------------------------------------------------------------------------


def _run_thm_1_1(ctx, rec, n_from, n_to):
    # m = n - 2 is deliberately absent: N(n-2, n) = 0 < 1 = N(n-2, n-1)
    t = ctx.ranks(n_to)
    for n in range(max(n_from, 1), n_to + 1):
        for m in range(0, max(n - 2, 0)):
            rec.check({"n": n, "m": m}, t.get(m, n), ">=", t.get(m, n - 1))
        rec.check({"n": n, "m": n - 1}, t.get(n - 1, n), ">=", t.get(n - 1, n - 1))


def _run_thm_1_2(ctx, rec, n_from, n_to):
    t = ctx.ranks(n_to)
    for n in range(max(n_from, 0), n_to + 1):
        for m in range(0, n):
            rec.check({"n": n, "m": m}, t.get(m, n), ">=", t.get(m + 2, n))


_register(TheoremSpec(
    id="THM1.1",
    description="rank counts weakly increase in n (with the top-m exception)",
    stated_n_from=12, n_base=1, run=_run_thm_1_1,
))

_register(TheoremSpec(
    id="THM1.2",
    description="rank counts weakly decrease in even steps of m",
    stated_n_from=0, n_base=0, run=_run_thm_1_2,
))


# --------------------------------------------------------------------------
# ospt bounds
# --------------------------------------------------------------------------


def _run_thm_1_3a(ctx, rec, n_from, n_to):
    p = ctx.pvec(n_to)
    o = ctx.ospt(n_to)
    ranks = ctx.ranks(n_to)
    m0 = ctx.crank_m0(n_to)
    for n in range(max(n_from, 1), n_to + 1):
        lhs = 4 * o[n]
        rhs = p[n] + 2 * ranks.get(0, n) - m0[n]
        rec.check({"n": n}, lhs, ">", rhs)


def _run_thm_1_3b(ctx, rec, n_from, n_to):
    p = ctx.pvec(n_to)
    o = ctx.ospt(n_to)
    ranks = ctx.ranks(n_to)
    m0 = ctx.crank_m0(n_to)
    for n in range(max(n_from, 1), n_to + 1):
        lhs = 4 * o[n]
        rhs = p[n] + 2 * ranks.get(0, n) - m0[n] + 2 * ranks.get(1, n)
        rec.check({"n": n}, lhs, "<", rhs)


def _run_thm_1_3c(ctx, rec, n_from, n_to):
    p = ctx.pvec(n_to)
    o = ctx.ospt(n_to)
    for n in range(max(n_from, 1), n_to + 1):
        rec.check({"n": n}, 2 * o[n], "<", p[n])


_register(TheoremSpec(
    id="THM1.3a",
    description="strict lower bound on 4*ospt(n)",
    stated_n_from=8, n_base=1, run=_run_thm_1_3a,
))
_register(TheoremSpec(
    id="THM1.3b",
    description="strict upper bound on 4*ospt(n)",
    stated_n_from=7, n_base=1, run=_run_thm_1_3b,
))
_register(TheoremSpec(
    id="THM1.3c",
    description="ospt(n) below half the partition count",
    stated_n_from=3, n_base=1, run=_run_thm_1_3c,
))


# --------------------------------------------------------------------------
# crank monotonicity and unimodality
# --------------------------------------------------------------------------


def _run_thm_1_6(ctx, rec, n_from, n_to):
    t = ctx.cranks(n_to)
    for n in range(max(n_from, 1), n_to + 1):
        for m in range(0, n - 1):
            rec.check({"n": n, "m": m}, t.get(m, n), ">=", t.get(m, n - 1))


def _run_thm_1_7(ctx, rec, n_from, n_to):
    t = ctx.cranks(n_to)
    for n in range(max(n_from, 1), n_to + 1):
        for m in range(1, n):
            rec.check({"n": n, "m": m}, t.get(m - 1, n), ">=", t.get(m, n))


def _run_cor_1_8(ctx, rec, n_from, n_to):
    # two formulations that must agree: the literal window scan and the
    # mirror reduction to nonnegative m
    t = ctx.cranks(n_to)
    for n in range(max(n_from, 1), n_to + 1):
        for m in range(-(n - 2), 1):
            rec.check(
                {"n": n, "m": m, "form": "window"},
                t.get(m, n), ">=", t.get(m - 1, n),
            )
        for m in range(0, n - 1):
            rec.check(
                {"n": n, "m": m, "form": "window"},
                t.get(m, n), ">=", t.get(m + 1, n),
            )
        for m in range(1, n):
            rec.check(
                {"n": n, "m": m, "form": "mirror"},
                t.get(m - 1, n), ">=", t.get(m, n),
            )


_register(TheoremSpec(
    id="THM1.6",
    description="crank counts weakly increase in n for 0 <= m <= n-2",
    stated_n_from=14, n_base=1, run=_run_thm_1_6,
))
_register(TheoremSpec(
    id="THM1.7",
    description="crank counts weakly decrease in m for 1 <= m <= n-1",
    stated_n_from=44, n_base=1, run=_run_thm_1_7,
))
_register(TheoremSpec(
    id="COR1.8",
    description="crank row is unimodal over the window |m| <= n-1",
    stated_n_from=44, n_base=1, run=_run_cor_1_8,
))


def _run_thm_1_9(ctx, rec, n_from, n_to):
    p = ctx.pvec(n_to)
    m0 = ctx.crank_m0(n_to)
    for n in range(max(n_from, 0), n_to + 1):
        rec.check({"n": n}, p[n], ">=", 21 * m0[n])


_register(TheoremSpec(
    id="THM1.9",
    description="partition count dominates 21 times the zero-crank count",
    stated_n_from=39, n_base=0, run=_run_thm_1_9,
))


# --------------------------------------------------------------------------
# family monotonicity
# --------------------------------------------------------------------------


def _run_thm_1_10(ctx, rec, n_from, n_to, k_max=25):
    for k in range(5, k_max + 1):
        c = ctx.fam("p", k, n_to)
        for n in range(max(n_from, 1), n_to + 1):
            rec.check({"n": n, "k": k}, c[n], ">=", c[n - 1])


def _run_thm_1_11(ctx, rec, n_from, n_to, k_max=25):
    # (k, n) = (3, 7) is excluded: pp_3(7) = 8 < 9 = pp_3(6) is the one
    # genuine exception (the k = 3 first difference is -1 exactly there),
    # so the blanket k >= 3, n >= 2 statement holds everywhere else
    for k in range(3, k_max + 1):
        c = ctx.fam("pp", k, n_to)
        for n in range(max(n_from, 1), n_to + 1):
            if k == 3 and n == 7:
                continue
            rec.check({"n": n, "k": k}, c[n], ">=", c[n - 1])


_register(TheoremSpec(
    id="THM1.10",
    description="bounded-part partition counts weakly increase for k >= 5",
    stated_n_from=14, n_base=1, run=_run_thm_1_10, defaults={"k_max": 25},
))
_register(TheoremSpec(
    id="THM1.11",
    description="pair counts weakly increase for k >= 3 (off (k,n)=(3,7))",
    stated_n_from=2, n_base=1, run=_run_thm_1_11, defaults={"k_max": 25},
))


# --------------------------------------------------------------------------
# the difference families d, t, f and the small-k closed forms
# --------------------------------------------------------------------------


def _run_thm_2_4(ctx, rec, n_from, n_to, k_max=25):
    lo = max(n_from, 0)
    d2 = ctx.fam("d", 2, n_to)
    d3 = ctx.fam("d", 3, n_to)
    d4 = ctx.fam("d", 4, n_to)
    for n in range(lo, n_to + 1):
        rec.check({"n": n, "clause": "d2"}, d2[n], "==", 1 if n % 2 == 0 else -1)
        r6 = n % 6
        want3 = 1 if r6 in (0, 2) else (-1 if r6 == 1 else 0)
        rec.check({"n": n, "clause": "d3"}, d3[n], "==", want3)
        if n % 2 == 0:
            rec.check({"n": n, "clause": "d4-even"}, d4[n], ">=", 0)
        elif n % 12 == 3:
            rec.check({"n": n, "clause": "d4-odd"}, d4[n], "==", -(n // 12))
        else:
            rec.check({"n": n, "clause": "d4-odd"}, d4[n], "==", -((n + 11) // 12))
    d5 = ctx.fam("d", 5, n_to)
    for n in range(max(lo, 2), n_to + 1):
        rec.check({"n": n, "clause": "d5"}, d5[n], ">=", 0)
        if n >= 14:
            rec.check({"n": n, "clause": "d5-pos"}, d5[n], ">=", 1)
    d6 = ctx.fam("d", 6, n_to)
    for n in range(max(lo, 14), n_to + 1):
        rec.check({"n": n, "clause": "d6"}, d6[n], ">=", 0)
    for k in range(7, k_max + 1):
        dk = ctx.fam("d", k, n_to)
        for n in range(max(lo, 2), n_to + 1):
            rec.check({"n": n, "k": k, "clause": "dk"}, dk[n], ">=", 0)
        if k + 2 <= n_to:
            rec.check({"n": k + 2, "k": k, "clause": "dk-pos"}, dk[k + 2], ">=", 1)
        if 2 * k + 7 <= n_to:
            rec.check(
                {"n": 2 * k + 7, "k": k, "clause": "dk-pos"}, dk[2 * k + 7], ">=", 1
            )


_register(TheoremSpec(
    id="THM2.4",
    description="all clauses for the first-difference family d",
    stated_n_from=0, n_base=0, run=_run_thm_2_4, defaults={"k_max": 25},
))


def _run_lem_2_3(ctx, rec, n_from, n_to, k_max=20):
    for k in range(4, k_max + 1):
        t = ctx.fam("t", k, n_to)
        for n in range(max(n_from, 0), n_to + 1):
            rec.check({"n": n, "k": k}, t[n], ">=", 0)
            if n >= 14 and k != 5:
                rec.check({"n": n, "k": k, "clause": "pos"}, t[n], ">=", 1)


_register(TheoremSpec(
    id="LEM2.3",
    description="the majorant family t is nonnegative (positive off k = 5)",
    stated_n_from=0, n_base=0, run=_run_lem_2_3, defaults={"k_max": 20},
))


def _run_cor_2_2(ctx, rec, n_from, n_to, k_max=15):
    for k in range(3, k_max + 1):
        c = ctx.fam("p", k, n_to)
        for n in range(max(n_from, 2), n_to + 1):
            rec.check({"n": n, "k": k}, c[n], ">=", 1)
            if n >= 12:
                rec.check({"n": n, "k": k, "clause": "floor"}, c[n], ">=", n // 6)


_register(TheoremSpec(
    id="COR2.2",
    description="bounded-part counts are positive, eventually >= floor(n/6)",
    stated_n_from=2, n_base=2, run=_run_cor_2_2, defaults={"k_max": 15},
))


def _run_thm_3_1(ctx, rec, n_from, n_to, k_max=20):
    lo = max(n_from, 0)
    for k in range(2, k_max + 1):
        c = ctx.fam("f", k, n_to)
        if lo <= 0 <= n_to:
            rec.check({"n": 0, "k": k, "clause": "init"}, c[0], "==", 1)
        if lo <= 1 <= n_to:
            rec.check({"n": 1, "k": k, "clause": "init"}, c[1], "==", -1)
    f2 = ctx.fam("f", 2, n_to)
    for n in range(lo, n_to + 1):
        if n % 2 == 0:
            rec.check({"n": n, "k": 2, "clause": "even"}, f2[n], ">=", 0)
        else:
            rec.check(
                {"n": n, "k": 2, "clause": "odd"}, f2[n], "==", -((n + 5) // 6)
            )
    f3 = ctx.fam("f", 3, n_to)
    for n in range(max(lo, 2), n_to + 1):
        if n != 7:
            rec.check({"n": n, "k": 3}, f3[n], ">=", 0)
        if n % 2 == 1 and n >= 17:
            rec.check(
                {"n": n, "k": 3, "clause": "growth"}, 2 * f3[n], ">=", n - 15
            )
    for k in range(4, k_max + 1):
        c = ctx.fam("f", k, n_to)
        for n in range(max(lo, 2), n_to + 1):
            rec.check({"n": n, "k": k}, c[n], ">=", 0)
        if 2 * k + 7 <= n_to:
            rec.check(
                {"n": 2 * k + 7, "k": k, "clause": "pos"}, c[2 * k + 7], ">=", 1
            )


_register(TheoremSpec(
    id="THM3.1",
    description="all clauses for the first-difference family f",
    stated_n_from=0, n_base=0, run=_run_thm_3_1, defaults={"k_max": 20},
))


def _run_eq_4_4(ctx, rec, n_from, n_to, m_max=15):
    t = ctx.cranks(n_to)
    for m in range(2, m_max + 1):
        d = ctx.fam("d", m, n_to)
        p = ctx.fam("p", m + 1, n_to)
        for n in range(max(n_from, 1), n_to + 1):
            lhs = t.get(m, n) - t.get(m, n - 1)
            dm = d[n - m] if n - m >= 0 else 0
            pm = p[n - 2 * m - 3] if n - 2 * m - 3 >= 0 else 0
            rec.check({"n": n, "m": m}, lhs, ">=", dm + pm)


_register(TheoremSpec(
    id="EQ4.4",
    description="crank increment dominated from below by d and p terms",
    stated_n_from=1, n_base=1, run=_run_eq_4_4, defaults={"m_max": 15},
))


# --------------------------------------------------------------------------
# pair-count families g, h
# --------------------------------------------------------------------------

_G_VS_H_THRESHOLD = {1: 20, 2: 51, 3: 67}


def _run_thm_9_1(ctx, rec, n_from, n_to, k_max=8):
    for k in range(1, k_max + 1):
        g = ctx.fam("g", k, n_to)
        h = ctx.fam("h", k, n_to)
        lo = max(n_from, _G_VS_H_THRESHOLD.get(k, 0))
        for n in range(lo, n_to + 1):
            rec.check({"n": n, "k": k}, g[n], ">=", 21 * h[n])


def _run_lem_9_3(ctx, rec, n_from, n_to, k_max=8):
    for k in range(1, k_max + 1):
        g = ctx.fam("g", k, n_to)
        h = ctx.fam("h", k, n_to)
        for n in range(max(n_from, 1), n_to + 1):
            rec.check({"n": n, "k": k, "clause": "g-mono"}, g[n], ">=", g[n - 1])
            rec.check({"n": n, "k": k, "clause": "h-mono"}, h[n], ">=", h[n - 1])
        if k >= 2:
            hprev = ctx.fam("h", k - 1, n_to)
            for n in range(max(n_from, 0), n_to + 1):
                rec.check(
                    {"n": n, "k": k, "clause": "cross"},
                    k * k * h[n], "<=", n * n * hprev[n],
                )


_register(TheoremSpec(
    id="THM9.1",
    description="pair counts dominate 21 times the restricted pair counts",
    stated_n_from=0, n_base=0, run=_run_thm_9_1, defaults={"k_max": 8},
))
_register(TheoremSpec(
    id="LEM9.3",
    description="monotonicity of g and h plus the k^2/n^2 cross bound",
    stated_n_from=0, n_base=0, run=_run_lem_9_3, defaults={"k_max": 8},
))


_GBOUND_CLAUSES = (
    # (family, k, scale, power, op, n_from)
    ("g", 2, 24, 3, ">=", 0),
    ("g", 3, 4320, 5, ">=", 3),
    ("g", 4, 2903040, 7, ">=", 8),
    ("h", 2, 4, 2, "<=", 0),
    ("h", 3, 36, 4, "<=", 0),
)


def _run_gbounds(ctx, rec, n_from, n_to):
    for fam_name, k, scale, power, op, lo_stated in _GBOUND_CLAUSES:
        c = ctx.fam(fam_name, k, n_to)
        for n in range(max(n_from, lo_stated), n_to + 1):
            rec.check(
                {"n": n, "k": k, "clause": f"{fam_name}{k}"},
                scale * c[n], op, n**power,
            )


_register(TheoremSpec(
    id="GBOUNDS",
    description="integer-exact polynomial bounds on g2, g3, g4, h2, h3",
    stated_n_from=0, n_base=0, run=_run_gbounds,
))


# --------------------------------------------------------------------------
# cumulative rank/crank comparisons and the ospt chain
# --------------------------------------------------------------------------


def _run_eq_9_5(ctx, rec, n_from, n_to):
    mc = ctx.crank_cum(n_to)
    nc = ctx.rank_cum(n_to)
    for n in range(max(n_from, 1), n_to + 1):
        for m in range(-n, 1):
            rec.check({"n": n, "m": m}, mc.le(m, n), "<=", nc.le(m + 1, n))


def _run_eq_9_6(ctx, rec, n_from, n_to):
    mc = ctx.crank_cum(n_to)
    nc = ctx.rank_cum(n_to)
    for n in range(max(n_from, 1), n_to + 1):
        for m in range(0, n + 1):
            rec.check({"n": n, "m": m}, nc.le(m - 1, n), "<=", mc.le(m, n))


def _run_eq_9_12(ctx, rec, n_from, n_to):
    ranks = ctx.ranks(n_to)
    m0 = ctx.crank_m0(n_to)
    for n in range(max(n_from, 1), n_to + 1):
        lhs = ranks.get(0, n) + ranks.get(1, n)
        rec.check({"n": n}, lhs, "<=", 4 * m0[n])


def _run_conj_1_4(ctx, rec, n_from, n_to):
    p = ctx.pvec(n_to)
    o = ctx.ospt(n_to)
    for n in range(max(n_from, 1), n_to + 1):
        rec.check({"n": n}, 3 * o[n], "<", p[n])


_register(TheoremSpec(
    id="EQ9.5",
    description="cumulative crank mass below cumulative rank mass (m <= 0)",
    stated_n_from=1, n_base=1, run=_run_eq_9_5,
))
_register(TheoremSpec(
    id="EQ9.6",
    description="cumulative rank mass below cumulative crank mass (m >= 0)",
    stated_n_from=1, n_base=1, run=_run_eq_9_6,
))
_register(TheoremSpec(
    id="EQ9.12",
    description="two central rank counts within four times the zero-crank count",
    stated_n_from=44, n_base=1, run=_run_eq_9_12,
))
_register(TheoremSpec(
    id="CONJ1.4",
    description="ospt(n) below a third of the partition count",
    stated_n_from=10, n_base=1, run=_run_conj_1_4,
))


# --------------------------------------------------------------------------
# public entry points
# --------------------------------------------------------------------------

SUITE_ORDER = (
    "THM1.1", "THM1.2", "THM1.3a", "THM1.3b", "THM1.3c",
    "THM1.6", "THM1.7", "COR1.8", "THM1.9", "THM1.10", "THM1.11",
    "THM2.4", "LEM2.3", "COR2.2", "THM3.1", "EQ4.4",
    "THM9.1", "LEM9.3", "GBOUNDS",
    "EQ9.5", "EQ9.6", "EQ9.12", "CONJ1.4",
)


def verify(
    theorem_id: str,
    n_to: int,
    overrides: Optional[Dict[str, int]] = None,
    ctx: Optional[VerifyContext] = None,
) -> VerificationReport:
    """Scan one theorem over [n_from, n_to] and report every violation.

    ``overrides`` may carry ``n_from`` plus any of the theorem's grid
    parameters (``k_max``, ``m_max``).  Defaults are the stated ranges.
    """
    if theorem_id not in REGISTRY:
        raise UnknownTheorem(theorem_id)
    spec = REGISTRY[theorem_id]
    overrides = dict(overrides or {})
    n_from = overrides.pop("n_from", spec.stated_n_from)
    if n_from < spec.n_base:
        n_from = spec.n_base
    params = dict(spec.defaults)
    for key, value in overrides.items():
        if key not in params:
            raise RangeError(f"{theorem_id} does not take override {key!r}")
        params[key] = value
    if n_to < n_from:
        raise RangeError(f"n_to={n_to} is below the scan start {n_from}")
    if ctx is None:
        ctx = VerifyContext()
    rec = _Recorder()
    spec.run(ctx, rec, n_from, n_to, **params)
    return VerificationReport(
        theorem_id=theorem_id,
        n_from=n_from,
        n_to=n_to,
        params=params,
        checked=rec.checked,
        violations=rec.violations,
        stated_n_from=spec.stated_n_from,
    )


def verify_suite(
    n_to: int, ctx: Optional[VerifyContext] = None
) -> List[VerificationReport]:
    """Run every registered theorem at its default range capped by n_to."""
    need = max(spec.stated_n_from for spec in REGISTRY.values())
    if n_to < need:
        raise RangeError(f"the full suite needs n_to >= {need}, got {n_to}")
    if ctx is None:
        ctx = VerifyContext()
    return [verify(tid, n_to, ctx=ctx) for tid in SUITE_ORDER]


def find_threshold(
    theorem_id: str, n_to: int, ctx: Optional[VerifyContext] = None
) -> Optional[int]:
    """Least n0 such that the theorem holds for all n0 <= n <= n_to.

    Scans from the theorem's base range, ignoring the stated threshold.
    Returns None when even n = n_to has a violation.
    """
    if theorem_id not in REGISTRY:
        raise UnknownTheorem(theorem_id)
    if n_to < 2:
        raise RangeError("threshold search needs n_to >= 2")
    spec = REGISTRY[theorem_id]
    report = verify(theorem_id, n_to, overrides={"n_from": spec.n_base}, ctx=ctx)
    if not report.violations:
        return spec.n_base
    worst = max(int(v.point["n"]) for v in report.violations)
    if worst >= n_to:
        return None
    return worst + 1


def stated_threshold(theorem_id: str) -> int:
    if theorem_id not in REGISTRY:
        raise UnknownTheorem(theorem_id)
    return REGISTRY[theorem_id].stated_n_from


def list_theorems() -> List[str]:
    return list(SUITE_ORDER)
