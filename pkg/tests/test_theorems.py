"""Verification harness: reports, thresholds, falsification hooks."""

from __future__ import annotations

import pytest

from crankq import theorems
from crankq.errors import RangeError, UnknownTheorem
from crankq.theorems import (
    SUITE_ORDER,
    find_threshold,
    stated_threshold,
    verify,
    verify_suite,
)


@pytest.mark.parametrize("theorem_id", SUITE_ORDER)
def test_default_ranges_pass_to_100(theorem_id, ctx):
    report = verify(theorem_id, 100, ctx=ctx)
    assert report.passed, report.violations[:3]
    assert report.checked > 0
    assert report.status == "pass"


def test_unknown_theorem_and_bad_range():
    with pytest.raises(UnknownTheorem):
        verify("NOPE", 100)
    with pytest.raises(RangeError):
        verify("THM1.7", 10)  # below the stated start 44
    with pytest.raises(RangeError):
        verify("THM1.9", 100, overrides={"bogus": 1})
    with pytest.raises(UnknownTheorem):
        find_threshold("NOPE", 100)


def test_reports_are_deterministic(ctx):
    a = verify("THM1.6", 60, ctx=ctx)
    b = verify("THM1.6", 60, ctx=ctx)
    assert a.as_dict() == b.as_dict()


def test_sub_threshold_scan_finds_violations(ctx):
    report = verify("THM1.9", 100, overrides={"n_from": 2}, ctx=ctx)
    assert not report.passed
    violating_n = {v.point["n"] for v in report.violations}
    assert 4 in violating_n  # p(4) = 5 < 21 = 21*M(0,4)
    assert max(violating_n) < 39


def test_falsified_comparison_cannot_pass(monkeypatch, ctx):
    monkeypatch.setattr(theorems, "_holds", lambda lhs, op, rhs: False)
    report = verify("THM1.7", 50, ctx=ctx)
    assert report.status == "fail"
    assert len(report.violations) == report.checked > 0


def test_find_threshold_values(ctx):
    assert find_threshold("COR1.8", 300, ctx=ctx) <= 44
    assert find_threshold("THM1.9", 500, ctx=ctx) <= 39
    assert find_threshold("CONJ1.4", 200, ctx=ctx) <= 10
    assert stated_threshold("COR1.8") == 44


def test_find_threshold_none_when_top_fails(monkeypatch, ctx):
    monkeypatch.setattr(theorems, "_holds", lambda lhs, op, rhs: False)
    assert find_threshold("THM1.9", 80, ctx=ctx) is None


def test_unimodality_formulations_agree(ctx):
    # the window scan and the mirror reduction must accept/reject together
    report = verify("COR1.8", 150, ctx=ctx)
    window = [v for v in report.violations if v.point.get("form") == "window"]
    mirror = [v for v in report.violations if v.point.get("form") == "mirror"]
    assert not window and not mirror
    low = verify("COR1.8", 43, overrides={"n_from": 2}, ctx=ctx)
    window_n = {v.point["n"] for v in low.violations if v.point["form"] == "window"}
    mirror_n = {v.point["n"] for v in low.violations if v.point["form"] == "mirror"}
    assert window_n == mirror_n  # same exceptional rows under both readings


def test_thm_1_1_gap_point_really_fails(ctx):
    # m = n - 2 is excluded from the scan because it genuinely drops:
    # no partition of n has rank n - 2, while (n - 1) alone has it at n - 1
    t = ctx.ranks(60)
    for n in (12, 25, 60):
        assert t.get(n - 2, n) == 0
        assert t.get(n - 2, n - 1) == 1


def test_pp3_exception_is_exactly_minus_one(ctx):
    # the one excluded point of the pp monotonicity scan, pinned exactly
    pp3 = ctx.fam("pp", 3, 10)
    assert pp3[7] - pp3[6] == -1
    f3 = ctx.fam("f", 3, 10)
    assert f3[7] == -1


def test_d6_small_exceptions_recorded(ctx):
    d6 = ctx.fam("d", 6, 20)
    assert {n for n in range(2, 14) if d6[n] < 0} == {7, 13}


def test_suite_runner_covers_registry(ctx):
    reports = verify_suite(60, ctx=ctx)
    assert [r.theorem_id for r in reports] == list(SUITE_ORDER)
    assert all(r.passed for r in reports)
    with pytest.raises(RangeError):
        verify_suite(40)  # below the largest stated threshold (44)


def test_single_point_range(ctx):
    report = verify("THM1.7", 44, ctx=ctx)
    assert report.passed
    assert report.checked == 43  # m = 1..43 at the single row n = 44


def test_crossover_of_polynomial_bounds():
    # scaled bound polynomials cross exactly at 105840
    assert 576 * 105839**7 < 21 * 2903040 * 105839**6
    assert 576 * 105840**7 >= 21 * 2903040 * 105840**6
    assert 21 * 2903040 // 576 == 105840
