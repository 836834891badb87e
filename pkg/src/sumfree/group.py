"""Finite abelian groups as explicit products of cyclic factors.

Groups are fixed as Z_{n_1} x ... x Z_{n_k}; elements are residue vectors.
No abstract group interface: every construction used here lives in Z_n, in
Z_2^k, or behind a coordinate projection, and index-r subgroups are realised
only as kernels of a coordinate projection composed with a residue map.

The identity never needs special casing in sum-free tests because 0 + 0 = 0
already disqualifies it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, prod

from .engine import maximal_sum_free_subsets, sum_free_subsets

GroupElem = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.factors or any(f < 2 for f in self.factors):
            raise ValueError("factors must all be >= 2")

    @classmethod
    def parse(cls, desc: str) -> "AbelianGroup":
        """Parse descriptors like "Z4xZ2xZ2"."""
        parts = desc.replace(" ", "").split("x")
        factors = []
        for p in parts:
            m = re.fullmatch(r"[Zz](\d+)", p)
            if not m:
                raise ValueError(f"bad group descriptor component {p!r}")
            factors.append(int(m.group(1)))
        return cls(tuple(factors))

    def describe(self) -> str:
        return "x".join(f"Z{f}" for f in self.factors)

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def exponent(self) -> int:
        e = 1
        for f in self.factors:
            e = e * f // gcd(e, f)
        return e

    @property
    def zero(self) -> GroupElem:
        return (0,) * len(self.factors)

    def check(self, g: GroupElem) -> GroupElem:
        if len(g) != len(self.factors) or any(
            not 0 <= a < f for a, f in zip(g, self.factors)
        ):
            raise ValueError(f"{g} is not an element of {self.describe()}")
        return g

    def add(self, g: GroupElem, h: GroupElem) -> GroupElem:
        self.check(g), self.check(h)
        return tuple((a + b) % f for a, b, f in zip(g, h, self.factors))

    def neg(self, g: GroupElem) -> GroupElem:
        self.check(g)
        return tuple((-a) % f for a, f in zip(g, self.factors))

    def sub(self, g: GroupElem, h: GroupElem) -> GroupElem:
        return self.add(g, self.neg(h))

    def elements(self) -> list[GroupElem]:
        out = [()]
        for f in self.factors:
            out = [e + (a,) for e in out for a in range(f)]
        return [tuple(e) for e in out]

    def index_of(self, g: GroupElem) -> int:
        """Flatten to a mixed-radix index (used as a graph vertex label)."""
        self.check(g)
        idx = 0
        for a, f in zip(g, self.factors):
            idx = idx * f + a
        return idx

    def from_index(self, idx: int) -> GroupElem:
        coords = []
        for f in reversed(self.factors):
            coords.append(idx % f)
            idx //= f
        return tuple(reversed(coords))

    def add_table(self) -> list[list[int]]:
        els = self.elements()
        return [
            [self.index_of(self.add(g, h)) for h in els] for g in els
        ]


@dataclass(frozen=True)
class GroupSubset:
    group: AbelianGroup
    members: frozenset[GroupElem]

    def __post_init__(self) -> None:
        for g in self.members:
            self.group.check(g)

    @classmethod
    def of(cls, group: AbelianGroup, members) -> "GroupSubset":
        return cls(group, frozenset(members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: GroupElem) -> bool:
        return g in self.members

    def sorted_members(self) -> list[GroupElem]:
        return sorted(self.members)


def is_sum_free_group(s: GroupSubset) -> bool:
    """No x, y, z in S with x + y = z (x = y allowed)."""
    grp, mem = s.group, s.members
    for x in mem:
        for y in mem:
            if grp.add(x, y) in mem:
                return False
    return True


def mu(group: AbelianGroup, limit: int = 24) -> int:
    """Size of the largest sum-free subset, by branch-and-bound search."""
    return len(max_sum_free(group, limit).members)


def max_sum_free(group: AbelianGroup, limit: int = 24) -> GroupSubset:
    """A maximum-size sum-free subset (the lexicographically first one the
    branch-and-bound search settles on)."""
    n = group.order
    if n > limit:
        raise ValueError(f"group order {n} exceeds the search limit {limit}")
    add = group.add_table()
    best: list[int] = []

    def rec(pos: int, members: list[int], member_mask: int, sums_mask: int) -> None:
        nonlocal best
        if len(members) > len(best):
            best = members.copy()
        if len(members) + (n - pos) <= len(best):
            return
        for x in range(pos, n):
            if _addable(members, member_mask, sums_mask, x, add):
                row = add[x]
                new_sums = sums_mask | (1 << row[x])
                for a in members:
                    new_sums |= 1 << row[a]
                members.append(x)
                rec(x + 1, members, member_mask | (1 << x), new_sums)
                members.pop()

    rec(0, [], 0, 0)
    return GroupSubset.of(group, (group.from_index(i) for i in best))


def _addable(members, member_mask, sums_mask, x, add) -> bool:
    if sums_mask >> x & 1:
        return False
    row = add[x]
    if row[x] == x or member_mask >> row[x] & 1:
        return False
    for a in members:
        if member_mask >> row[a] & 1 or row[a] == x:
            return False
    return True


def unique_half(group: AbelianGroup, x: GroupElem) -> GroupElem:
    """The unique y with y + y = x; only exists in groups of odd order."""
    if group.order % 2 == 0:
        raise ValueError("halving is not unique in groups of even order")
    group.check(x)
    return tuple((a * ((f + 1) // 2)) % f for a, f in zip(x, group.factors))


def coset_partition(group: AbelianGroup, r: int) -> list[GroupSubset]:
    """Cosets 0+H, 1+H, ..., (r-1)+H for H the kernel of a coordinate
    projection followed by reduction mod r.  Errors when no coordinate
    admits such a projection."""
    if r < 1:
        raise ValueError("index must be >= 1")
    axis = next((j for j, f in enumerate(group.factors) if f % r == 0), None)
    if axis is None:
        raise ValueError(
            f"no index-{r} subgroup via coordinate projection in {group.describe()}"
        )
    cosets: list[set[GroupElem]] = [set() for _ in range(r)]
    for g in group.elements():
        cosets[g[axis] % r].add(g)
    return [GroupSubset.of(group, c) for c in cosets]


def enumerate_sum_free_group(group: AbelianGroup, limit: int = 24) -> list[GroupSubset]:
    if group.order > limit:
        raise ValueError(f"group order {group.order} exceeds the limit {limit}")
    add = group.add_table()
    subsets = sum_free_subsets(group.order, add)
    return [
        GroupSubset.of(group, (group.from_index(i) for i in s)) for s in subsets
    ]


def enumerate_maximal_sum_free_group(
    group: AbelianGroup, limit: int = 24
) -> list[GroupSubset]:
    if group.order > limit:
        raise ValueError(f"group order {group.order} exceeds the limit {limit}")
    add = group.add_table()
    subsets = maximal_sum_free_subsets(group.order, add)
    return [
        GroupSubset.of(group, (group.from_index(i) for i in s)) for s in subsets
    ]


def f_group(group: AbelianGroup, limit: int = 24) -> int:
    """Number of sum-free subsets of the group (empty set included)."""
    return len(enumerate_sum_free_group(group, limit))


def f_max_group(group: AbelianGroup, limit: int = 24) -> int:
    """Number of maximal sum-free subsets of the group."""
    return len(enumerate_maximal_sum_free_group(group, limit))
