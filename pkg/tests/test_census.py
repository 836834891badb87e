"""Counts of sum-free and maximal sum-free subsets of [n]: the all-subsets
oracle, the branch route, and the refined censuses built on link graphs."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from sumfree.census import (
    EnumRecord,
    dprime_sum,
    enumerate_maximal_sum_free,
    even_link_term,
    f_branch,
    f_max_branch,
    f_max_oracle,
    f_oracle,
    refined_counts,
    single_even_census,
    small_sumset_count,
    sum_free_subsets_of,
    two_step_enumerate,
)
from sumfree.intset import IntSubset, is_maximal_sum_free, iter_mask
from sumfree.mis import EnumerationLimitError

# frozen by running the all-subsets oracle
F_VALUES = [2, 3, 6, 9, 16, 24, 42, 61, 108, 151, 253, 369, 607, 847]
F_MAX_VALUES = [1, 2, 2, 4, 5, 6, 8, 13, 17, 23, 29, 37, 51, 66]


def test_oracle_frozen_values():
    assert [f_oracle(n) for n in range(1, 15)] == F_VALUES
    assert [f_max_oracle(n) for n in range(1, 15)] == F_MAX_VALUES
    assert f_oracle(22) == 20982
    assert f_max_oracle(22) == 598


def test_oracle_limit():
    with pytest.raises(ValueError):
        f_oracle(27)


def test_branch_matches_oracle():
    for n in range(1, 19):
        assert f_branch(n) == f_oracle(n)
        assert f_max_branch(n) == f_max_oracle(n)


def test_workers_do_not_change_counts():
    assert f_branch(16, workers=3) == f_branch(16)
    assert f_max_branch(16, workers=3) == f_max_branch(16)


def test_enumeration_examples():
    assert [s.members for s in enumerate_maximal_sum_free(1)] == [(1,)]
    assert [s.members for s in enumerate_maximal_sum_free(2)] == [(1,), (2,)]
    assert [s.members for s in enumerate_maximal_sum_free(4)] == [
        (1, 3),
        (1, 4),
        (2, 3),
        (3, 4),
    ]


def test_enumerated_sets_are_maximal():
    for n in (6, 9, 12):
        sets = enumerate_maximal_sum_free(n)
        assert len(sets) == F_MAX_VALUES[n - 1]
        assert all(is_maximal_sum_free(s) for s in sets)
        members = [s.members for s in sets]
        assert members == sorted(members)


def test_enumeration_limit():
    with pytest.raises(EnumerationLimitError):
        enumerate_maximal_sum_free(30, limit=20)


def test_two_step_full_reproduction():
    for n in range(2, 19):
        full = [s.members for s in enumerate_maximal_sum_free(n)]
        got = two_step_enumerate(
            IntSubset.of(n, range(1, n // 2 + 1)),
            IntSubset.of(n, range(n // 2 + 1, n + 1)),
            n,
        )
        assert [s.members for s in got] == full


def test_two_step_restriction():
    got = two_step_enumerate(
        IntSubset.of(12, []), IntSubset.of(12, range(7, 13)), 12
    )
    assert [s.members for s in got] == [(7, 8, 9, 10, 11, 12)]
    assert [s.members for s in two_step_enumerate(
        IntSubset.of(1, [1]), IntSubset.of(1, []), 1
    )] == [(1,)]


def test_two_step_preconditions():
    with pytest.raises(ValueError):
        two_step_enumerate(IntSubset.of(8, [3]), IntSubset.of(8, [3, 7]), 8)
    with pytest.raises(ValueError):
        two_step_enumerate(IntSubset.of(8, [5]), IntSubset.of(8, [1, 2]), 8)


def test_refined_counts_matching_case():
    rc = refined_counts(16, 4, [])
    assert rc.mis_link == 16
    assert rc.msf == 5
    assert rc.ratio_c == Fraction(1, 1)
    assert rc.msf <= rc.mis_link


def test_refined_counts_preconditions():
    with pytest.raises(ValueError):
        refined_counts(16, 9, [])  # m beyond n/2
    with pytest.raises(ValueError):
        refined_counts(16, 4, [8, 4])  # seed not sum-free
    with pytest.raises(ValueError):
        refined_counts(16, 3, [6])  # 2m inside S


def test_refined_counts_partition_identity():
    # summing msf over every admissible (m, S) counts exactly the maximal
    # sets whose minimum lies in the lower half
    for n in (8, 10, 12):
        want = sum(
            1 for s in enumerate_maximal_sum_free(n) if 2 * min(s.members) <= n
        )
        total = 0
        half = list(range(1, n // 2 + 1))
        for seed_mask in sum_free_subsets_of(half):
            members = list(iter_mask(seed_mask))
            if not members:
                continue
            m = members[0]
            s = members[1:]
            if 2 * m in s:
                continue
            total += refined_counts(n, m, s).msf
        assert total == want, n


def test_single_even_census_values():
    assert single_even_census(4) == type(single_even_census(4))(4, 3, 1, 3)
    census = single_even_census(12)
    assert (census.f_prime_max, census.lower, census.upper) == (6, -76, 28)
    for n in range(4, 15):
        c = single_even_census(n)
        assert c.lower <= c.f_prime_max <= c.upper


def test_even_link_sums():
    sums = dprime_sum(16)
    assert (sums.total, sums.restricted) == (69, 32)
    assert sums.restricted == sums.restricted_formula
    assert sums.geometric_closed_form == 45 == 3 * 2**4 - 3
    for n in (12, 20, 24):
        s = dprime_sum(n)
        assert s.restricted <= s.geometric_closed_form
        assert s.geometric_closed_form == 3 * 2 ** (n // 4) - 3


def test_even_link_term():
    assert even_link_term(8) == 4
    assert even_link_term(10) == 4
    assert even_link_term(20) == 32
    with pytest.raises(ValueError):
        even_link_term(7)


def test_small_sumset_census():
    assert small_sumset_count(6, 2, 3).count == 15
    assert small_sumset_count(10, 3, 2).count == 120
    # the whole interval: |[d] + [d]| = 2d - 1
    assert small_sumset_count(5, 5, 2).count == 1  # 9 <= 10
    assert small_sumset_count(5, 5, 1).count == 0  # 9 > 5
    assert small_sumset_count(12, 3, Fraction(5, 3)).count == sum(
        1
        for a in range(1, 13)
        for b in range(a + 1, 13)
        for c in range(b + 1, 13)
        if len({a + a, a + b, a + c, b + b, b + c, c + c}) <= 5
    )
    with pytest.raises(EnumerationLimitError):
        small_sumset_count(40, 20, 3, limit=1000)


def test_restriction_monotone():
    # counting maximal sets of [n] inside S never exceeds the count inside
    # any superset T
    n = 14
    maximal = [set(s.members) for s in enumerate_maximal_sum_free(n)]
    rng = random.Random(3)
    for _ in range(40):
        t = {x for x in range(1, n + 1) if rng.random() < 0.7}
        s = {x for x in t if rng.random() < 0.7}
        inside_s = sum(1 for m in maximal if m <= s)
        inside_t = sum(1 for m in maximal if m <= t)
        assert inside_s <= inside_t


def test_enum_record_csv():
    rec = EnumRecord("12", 369, 37, "branch", 1.5)
    row = rec.csv_row()
    assert row.startswith("12,0,369,37,")
    assert row.endswith(",branch,1.5")
