"""Brute-force oracle: partitions, crank, rank, small distributions."""

from __future__ import annotations

import pytest

from crankq.enumeration import (
    crank,
    crank_distribution_bruteforce,
    partitions_of,
    rank,
    rank_distribution_bruteforce,
    rank_distribution_dp,
)
from crankq.errors import EmptyPartition, SoftLimitExceeded
from crankq.statistics import partition_numbers


def test_partitions_of_zero_and_four():
    assert list(partitions_of(0)) == [()]
    got = list(partitions_of(4))
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partition_count_matches_euler_product():
    pvec = partition_numbers(30)
    assert sum(1 for _ in partitions_of(30)) == pvec[30]
    assert all(sum(1 for _ in partitions_of(n)) == pvec[n] for n in range(16))


def test_partitions_are_weakly_decreasing():
    for n in range(12):
        for p in partitions_of(n):
            assert all(p[i] >= p[i + 1] >= 1 for i in range(len(p) - 1))
            assert sum(p) == n


@pytest.mark.parametrize(
    "parts,expected",
    [((5,), 5), ((3, 1), 0), ((2, 1, 1), -2), ((4, 3), 4), ((1,), -1)],
)
def test_crank_values(parts, expected):
    assert crank(parts) == expected


@pytest.mark.parametrize(
    "parts,expected", [((3,), 2), ((3, 1), 1), ((1, 1, 1), -2), ((2, 2), 0)]
)
def test_rank_values(parts, expected):
    assert rank(parts) == expected


def test_empty_partition_rejected():
    with pytest.raises(EmptyPartition):
        crank(())
    with pytest.raises(EmptyPartition):
        rank(())


def test_crank_distribution_conventions():
    assert crank_distribution_bruteforce(0) == {0: 1}
    assert crank_distribution_bruteforce(1) == {-1: 1, 0: -1, 1: 1}
    assert crank_distribution_bruteforce(4) == {-4: 1, -2: 1, 0: 1, 2: 1, 4: 1}


def test_rank_distribution_small():
    assert rank_distribution_bruteforce(1) == {0: 1}
    assert rank_distribution_bruteforce(3) == {-2: 1, 0: 1, 2: 1}


def test_distributions_sum_to_partition_count():
    pvec = partition_numbers(30)
    for n in range(31):
        assert sum(crank_distribution_bruteforce(n).values()) == pvec[n]
        assert sum(rank_distribution_bruteforce(n).values()) == pvec[n]


def test_crank_symmetry_at_oracle_level():
    for n in range(31):
        d = crank_distribution_bruteforce(n)
        assert all(d[m] == d.get(-m, 0) for m in d)


def test_rank_multiset_symmetric_under_negation():
    # conjugation swaps largest part and part count
    for n in range(1, 31):
        d = rank_distribution_bruteforce(n)
        assert all(d[m] == d.get(-m, 0) for m in d)


def test_soft_cap():
    with pytest.raises(SoftLimitExceeded):
        crank_distribution_bruteforce(46)
    with pytest.raises(SoftLimitExceeded):
        rank_distribution_bruteforce(99, limit=50)
    # explicit limit raise is allowed
    crank_distribution_bruteforce(12, limit=12)


def test_rank_dp_against_bruteforce():
    table = rank_distribution_dp(25)
    for n in range(26):
        want = rank_distribution_bruteforce(n)
        got = {m: table.get(m, n) for m in table.m_range(n) if table.get(m, n)}
        assert got == want


def test_rank_dp_edges():
    table = rank_distribution_dp(40)
    assert table.get(0, 1) == 1
    for n in range(1, 41):
        assert table.get(n - 1, n) == 1  # only the single-part partition
    assert table.is_symmetric()
