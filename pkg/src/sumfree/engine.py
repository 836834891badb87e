"""Generic enumeration of sum-free subsets of a finite addition structure.

The integer interval has a fast bigint specialisation elsewhere; this module
handles any structure given as element indices 0..N-1 plus an addition table
(used for finite abelian groups).  The recursion walks elements in index
order, keeps the running set sum-free via incremental checks, and certifies
maximality at the leaves by testing every absent element.
"""

from __future__ import annotations

from typing import Callable, Sequence


def _can_add(members: list[int], member_mask: int, sums_mask: int, x: int,
             add: Sequence[Sequence[int]]) -> bool:
    """Whether the sum-free set stays sum-free after inserting x."""
    if sums_mask >> x & 1:  # x = a + b
        return False
    row = add[x]
    if row[x] == x:  # x + x = x: the identity element
        return False
    if member_mask >> row[x] & 1:  # x + x = c
        return False
    for a in members:
        if member_mask >> row[a] & 1 or row[a] == x:  # x + a in S, or x + a = x
            return False
    return True


def sum_free_subsets(
    n: int,
    add: Sequence[Sequence[int]],
    keep: Callable[[list[int], int, int], bool] | None = None,
) -> list[tuple[int, ...]]:
    """All sum-free subsets of the structure, optionally filtered by `keep`
    (called with members, member_mask, sums_mask at each leaf)."""
    out: list[tuple[int, ...]] = []
    members: list[int] = []

    def rec(pos: int, member_mask: int, sums_mask: int) -> None:
        if pos == n:
            if keep is None or keep(members, member_mask, sums_mask):
                out.append(tuple(members))
            return
        x = pos
        rec(pos + 1, member_mask, sums_mask)
        if _can_add(members, member_mask, sums_mask, x, add):
            new_sums = sums_mask
            row = add[x]
            for a in members:
                new_sums |= 1 << row[a]
            new_sums |= 1 << row[x]
            members.append(x)
            rec(pos + 1, member_mask | (1 << x), new_sums)
            members.pop()

    rec(0, 0, 0)
    return out


def maximal_sum_free_subsets(
    n: int, add: Sequence[Sequence[int]]
) -> list[tuple[int, ...]]:
    """All maximal sum-free subsets, in canonical (sorted members) order."""

    def keep(members: list[int], member_mask: int, sums_mask: int) -> bool:
        for x in range(n):
            if member_mask >> x & 1:
                continue
            if _can_add(members, member_mask, sums_mask, x, add):
                return False
        return True

    return sorted(sum_free_subsets(n, add, keep))
