"""Finite abelian groups: arithmetic, sum-free search, cosets, counts."""

from __future__ import annotations

from itertools import combinations

import pytest

from sumfree.group import (
    AbelianGroup,
    GroupSubset,
    coset_partition,
    enumerate_maximal_sum_free_group,
    f_group,
    f_max_group,
    is_sum_free_group,
    max_sum_free,
    mu,
    unique_half,
)

Z5 = AbelianGroup((5,))
Z22 = AbelianGroup((2, 2))


def brute_force_group_counts(group: AbelianGroup) -> tuple[int, int]:
    """Oracle over all subsets of the group."""
    elements = group.elements()
    f = fmax = 0
    for r in range(len(elements) + 1):
        for combo in combinations(elements, r):
            s = GroupSubset.of(group, combo)
            if not is_sum_free_group(s):
                continue
            f += 1
            extendable = any(
                g not in s.members
                and is_sum_free_group(GroupSubset.of(group, set(combo) | {g}))
                for g in elements
            )
            if not extendable:
                fmax += 1
    return f, fmax


def test_arithmetic():
    assert Z5.add((3,), (4,)) == (2,)
    assert AbelianGroup((7,)).neg((3,)) == (4,)
    assert Z22.add((1, 0), (1, 1)) == (0, 1)
    with pytest.raises(ValueError):
        Z5.add((3,), (1, 0))


def test_parse_roundtrip():
    g = AbelianGroup.parse("Z4xZ2xZ2")
    assert g.factors == (4, 2, 2)
    assert g.describe() == "Z4xZ2xZ2"
    assert g.order == 16 and g.exponent == 4
    with pytest.raises(ValueError):
        AbelianGroup.parse("Q8")


def test_index_round_trip():
    g = AbelianGroup((3, 4))
    for e in g.elements():
        assert g.from_index(g.index_of(e)) == e


def test_is_sum_free_group():
    assert is_sum_free_group(GroupSubset.of(Z22, [(0, 1), (1, 0)]))
    assert is_sum_free_group(GroupSubset.of(Z5, [(1,), (4,)]))
    assert not is_sum_free_group(GroupSubset.of(Z5, [(0,)]))  # 0 + 0 = 0


def test_mu_values():
    assert mu(AbelianGroup((2,))) == 1
    assert mu(Z5) == 2
    assert mu(AbelianGroup((2, 2, 2))) == 4
    for k in range(1, 5):
        grp = AbelianGroup((2,) * k)
        assert mu(grp, limit=16) == 2 ** (k - 1)
    with pytest.raises(ValueError):
        mu(AbelianGroup((5, 7)))


def test_mu_range_bounds():
    # 2n/7 <= mu(G) <= n/2 on a battery of small groups
    for desc in ("Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10",
                 "Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2", "Z12", "Z3xZ5"):
        grp = AbelianGroup.parse(desc)
        m = mu(grp)
        assert 2 * grp.order <= 7 * m, desc
        assert 2 * m <= grp.order, desc


def test_max_sum_free_is_witness():
    w = max_sum_free(AbelianGroup((9,)))
    assert is_sum_free_group(w)
    assert len(w.members) == mu(AbelianGroup((9,)))


def test_unique_half():
    assert unique_half(Z5, (1,)) == (3,)
    assert unique_half(AbelianGroup((9,)), (0,)) == (0,)
    g15 = AbelianGroup((3, 5))
    for x in g15.elements():
        y = unique_half(g15, x)
        assert g15.add(y, y) == x
    with pytest.raises(ValueError):
        unique_half(AbelianGroup((4,)), (2,))


def test_coset_partition():
    cosets = coset_partition(AbelianGroup((9,)), 3)
    assert [sorted(v[0] for v in c.members) for c in cosets] == [
        [0, 3, 6],
        [1, 4, 7],
        [2, 5, 8],
    ]
    assert [len(c) for c in coset_partition(AbelianGroup((7,)), 7)] == [1] * 7
    with pytest.raises(ValueError):
        coset_partition(AbelianGroup((4,)), 3)


def test_group_counts_against_oracle():
    for desc in ("Z2", "Z3", "Z2xZ2", "Z5", "Z6", "Z7"):
        grp = AbelianGroup.parse(desc)
        f, fmax = brute_force_group_counts(grp)
        assert f_group(grp) == f, desc
        assert f_max_group(grp) == fmax, desc
    assert f_group(AbelianGroup((2,))) == 2
    assert f_max_group(AbelianGroup((2,))) == 1


def test_maximal_enumeration_members_are_maximal():
    grp = AbelianGroup((2, 2))
    maximal = enumerate_maximal_sum_free_group(grp)
    assert len(maximal) == 3
    for s in maximal:
        assert is_sum_free_group(s)
        for g in grp.elements():
            if g not in s.members:
                assert not is_sum_free_group(
                    GroupSubset.of(grp, set(s.members) | {g})
                )
