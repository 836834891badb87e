"""Arithmetic over the integer interval [n] = {1, ..., n}.

A triple x, y, z with x + y = z is a Schur triple; x and y need not be
distinct.  A set is sum-free if it contains no Schur triple, and a sum-free
subset of [n] is maximal if no element of [n] can be added to it without
creating a Schur triple.

Subsets of [n] are carried as Python bigint bitmasks (bit e-1 <-> element e),
which makes the hot tests one shift-and-AND each:

    exists y, z in S with y + x = z         <=>  S & (S >> x) != 0
    sums  {y + s : y in S}                   =   S << s
    diffs {y - s : y in S, y > s}            =   S >> s

`IntSubset` is the user-facing wrapper; the `mask_*` helpers are shared with
the enumeration engine, which walks millions of masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


@dataclass(frozen=True)
class GroundSet:
    """The interval [n] = {1, ..., n}."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"ground set needs n >= 1, got {self.n}")

    @property
    def universe_mask(self) -> int:
        return (1 << self.n) - 1


def mask_from_members(members: Iterable[int], n: int) -> int:
    mask = 0
    for e in members:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside [1, {n}]")
        mask |= 1 << (e - 1)
    return mask


def iter_mask(mask: int) -> Iterator[int]:
    """Yield the elements of a bitmask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def mask_is_sum_free(mask: int) -> bool:
    m = mask
    while m:
        low = m & -m
        x = low.bit_length()
        if mask & (mask >> x):
            return False
        m ^= low
    return True


def mask_blocked(mask: int) -> int:
    """Elements whose addition to a sum-free `mask` breaks sum-freeness.

    blocked = (S+S) | {z - s : z, s in S} | {s/2 : s in S even}; elements of
    S itself are not treated specially (callers intersect with the
    complement).  Only valid when `mask` is sum-free: then every new Schur
    triple must involve the added element.
    """
    blocked = 0
    m = mask
    while m:
        low = m & -m
        s = low.bit_length()
        blocked |= (mask << s) | (mask >> s)
        if s % 2 == 0:
            blocked |= 1 << (s // 2 - 1)
        m ^= low
    return blocked


def mask_can_add(mask: int, sums: int, x: int) -> bool:
    """Whether sum-free `mask` stays sum-free after adding x.

    `sums` must be the bitmask of mask+mask (maintained incrementally by the
    enumeration engine as sums |= (T << x) on each insertion).
    """
    bit = 1 << (x - 1)
    if sums & bit:  # x = y + z
        return False
    if mask & (mask >> x):  # y + x = z
        return False
    if x % 2 == 0 and mask & (1 << (x // 2 - 1)):  # y + y = x
        return False
    if mask >> (2 * x - 1) & 1:  # x + x = z
        return False
    return True


@dataclass(frozen=True)
class IntSubset:
    """A subset of [n], bit-indexed over {1, ..., n}."""

    ground: GroundSet
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.ground.n:
            raise ValueError("subset mask has bits outside the ground set")

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> "IntSubset":
        return cls(GroundSet(n), mask_from_members(members, n))

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_mask(self.mask))

    @property
    def n(self) -> int:
        return self.ground.n

    def __contains__(self, e: int) -> bool:
        return 1 <= e <= self.ground.n and bool(self.mask >> (e - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_mask(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def with_element(self, e: int) -> "IntSubset":
        return IntSubset(self.ground, self.mask | (1 << (e - 1)))

    def complement(self) -> "IntSubset":
        return IntSubset(self.ground, self.ground.universe_mask & ~self.mask)


@dataclass(frozen=True)
class SetStats:
    """min, second-smallest, max, even count and size of a subset."""

    min: Optional[int]
    min2: Optional[int]
    max: Optional[int]
    even_count: int
    size: int


def set_stats(s: IntSubset) -> SetStats:
    members = s.members
    return SetStats(
        min=members[0] if members else None,
        min2=members[1] if len(members) >= 2 else None,
        max=members[-1] if members else None,
        even_count=sum(1 for e in members if e % 2 == 0),
        size=len(members),
    )


def is_schur_triple(x: int, y: int, z: int) -> bool:
    """Ordered test: x + y = z.  Repeated elements are allowed (1+1=2)."""
    return x + y == z


def unordered_schur(a: int, b: int, c: int) -> bool:
    """Whether {a, b, c} forms a Schur triple under some ordering."""
    return a + b == c or a + c == b or b + c == a


def is_sum_free(s: IntSubset) -> bool:
    return mask_is_sum_free(s.mask)


def addable_elements(s: IntSubset) -> IntSubset:
    """All x in [n] \\ S such that S + {x} is still sum-free."""
    if not is_sum_free(s):
        raise ValueError("addable_elements requires a sum-free set")
    free = s.ground.universe_mask & ~s.mask & ~mask_blocked(s.mask)
    return IntSubset(s.ground, free)


def is_maximal_sum_free(s: IntSubset) -> bool:
    return is_sum_free(s) and addable_elements(s).mask == 0


def schur_triple_count(s: IntSubset) -> int:
    """Number of triples (x, y, z) in S^3 with x <= y and x + y = z."""
    members = s.members
    count = 0
    for i, x in enumerate(members):
        for y in members[i:]:
            if x + y in s:
                count += 1
    return count


def sumset(a: IntSubset, b: IntSubset) -> frozenset[int]:
    """A + B = {a + b}; not truncated to the ground set."""
    return frozenset(x + y for x in a for y in b)
