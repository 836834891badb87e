"""Exact counts of sum-free and maximal sum-free subsets of [n].

Two independent routes are provided and cross-checked:

* oracle: a vectorised sweep over all 2^n subset masks.  Sum-freeness
  satisfies a one-step recurrence on the smallest element x of a mask m
  (m is sum-free iff m - x is, x is not a sum of two members, and no member
  plus x lands in the set), so one pass in increasing popcount order fills
  the whole table.
* branch: a prefix-tree walk that only visits sum-free sets, certifying
  maximality at the leaves by testing every absent element.  This is the
  route that scales past n = 26 and the one the CLI parallelises.

On top of the enumeration sit the refined counts used by the upper-half
analysis (link-graph maximal-independent-set counts per choice of minimum m
and lower fringe S), the census of maximal sets with exactly one even
member together with its inclusion-exclusion sandwich, the even-link sums
whose 2^{n/4} ratios stabilise by residue class, and a census of sets with
small sumset.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .intset import (
    GroundSet,
    IntSubset,
    iter_mask,
    mask_can_add,
    mask_is_sum_free,
)
from .linkgraph import link_family, link_graph_ints, link_pair_even, link_single_even
from .mis import EnumerationLimitError, count_mis, enumerate_mis

ORACLE_MAX_N = 26


@dataclass(frozen=True)
class EnumRecord:
    """One row of computed results for a ground structure."""

    ground: str
    f: int
    f_max: int
    method: str
    elapsed_ms: float

    def csv_row(self) -> str:
        n = int(self.ground)
        ratio = self.f_max / 2 ** (n / 4)
        return (
            f"{n},{n % 4},{self.f},{self.f_max},{ratio:.6f},"
            f"{self.method},{self.elapsed_ms:.1f}"
        )

    CSV_HEADER = (
        "n,residue_mod_4,f,f_max,ratio_fmax_over_2_pow_n_quarter,method,elapsed_ms"
    )


# ---------------------------------------------------------------------------
# oracle route: all 2^n masks
# ---------------------------------------------------------------------------


def sum_free_mask_table(n: int) -> np.ndarray:
    """Boolean table over all 2^n masks: entry m <=> mask m is sum-free."""
    if not 1 <= n <= ORACLE_MAX_N:
        raise ValueError(f"oracle sweep supports 1 <= n <= {ORACLE_MAX_N}")
    size = 1 << n
    dp = np.zeros(size, dtype=bool)
    dp[0] = True
    pc = np.empty(size, dtype=np.uint8)
    chunk = 1 << 22
    for a in range(0, size, chunk):
        b = min(a + chunk, size)
        pc[a:b] = np.bitwise_count(np.arange(a, b, dtype=np.int64))
    for k in range(1, n + 1):
        sel = np.flatnonzero(pc == k)
        if sel.size == 0:
            continue
        low = sel & -sel
        x = np.frexp(low.astype(np.float64))[1].astype(np.int64)  # min element
        rest = sel ^ low
        ok = dp[rest]
        ok &= (rest & (rest >> x)) == 0  # no y with y + x in the set
        ok &= ((rest >> (2 * x - 1)) & 1) == 0  # x + x not in the set
        dp[sel] = ok
    return dp


def f_oracle(n: int) -> int:
    """Number of sum-free subsets of [n] (empty set included)."""
    return int(sum_free_mask_table(n).sum())


def f_max_oracle(n: int) -> int:
    """Number of maximal sum-free subsets of [n], by filtering the full
    subset table through the definition: no single added element leaves the
    set sum-free.  Deliberately avoids the branch route's addability
    helpers so the two routes stay independent."""
    dp = sum_free_mask_table(n)
    count = 0
    for m in np.flatnonzero(dp).tolist():
        if all(
            m >> x & 1 or not mask_is_sum_free(m | (1 << x)) for x in range(n)
        ):
            count += 1
    return count


def _sums_of(mask: int) -> int:
    sums = 0
    m = mask
    while m:
        low = m & -m
        sums |= mask << low.bit_length()
        m ^= low
    return sums


def _leaf_is_maximal(mask: int, sums: int, universe: int) -> bool:
    """Whether a sum-free mask admits no addable element in the universe."""
    free = universe & ~mask & ~sums
    if not free:
        return True
    blocked = 0
    m = mask
    while m:
        low = m & -m
        s = low.bit_length()
        blocked |= mask >> s
        if s % 2 == 0:
            blocked |= 1 << (s // 2 - 1)
        m ^= low
    return not (free & ~blocked)


# ---------------------------------------------------------------------------
# branch route: prefix tree over sum-free sets only
# ---------------------------------------------------------------------------


def _branch_count(n: int, start: int, mask: int, sums: int) -> int:
    """Number of sum-free subsets of [n] whose restriction to [start-1] is
    exactly `mask`."""
    count = 1
    for x in range(start, n + 1):
        if mask_can_add(mask, sums, x):
            t = mask | (1 << (x - 1))
            count += _branch_count(n, x + 1, t, sums | (t << x))
    return count


def _branch_maximal(
    n: int, start: int, mask: int, sums: int, universe: int, out: Optional[list]
) -> int:
    """Count (and optionally collect) the maximal sum-free sets whose
    restriction to [start-1] equals `mask`.  Every node of the prefix tree
    owns exactly one sum-free set, so testing maximality once per node
    counts each set once."""

    def rec(start: int, mask: int, sums: int) -> int:
        count = 0
        for x in range(start, n + 1):
            if mask_can_add(mask, sums, x):
                t = mask | (1 << (x - 1))
                count += rec(x + 1, t, sums | (t << x))
        if _leaf_is_maximal(mask, sums, universe):
            count += 1
            if out is not None:
                out.append(mask)
        return count

    return rec(start, mask, sums)


def f_branch(n: int, workers: int = 1) -> int:
    """f(n) by the prefix-tree walk."""
    if workers <= 1:
        return _branch_count(n, 1, 0, 0)
    tasks = _split_tasks(n, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_task, tasks))


def f_max_branch(n: int, workers: int = 1) -> int:
    """f_max(n) by the prefix-tree walk with leaf maximality certification."""
    universe = (1 << n) - 1
    if workers <= 1:
        return _branch_maximal(n, 1, 0, 0, universe, None)
    tasks = _split_tasks(n, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_max_task, tasks))


def enumerate_maximal_sum_free(n: int, limit: int = 40) -> list[IntSubset]:
    """All maximal sum-free subsets of [n], canonically ordered."""
    if n > limit:
        raise EnumerationLimitError(f"n = {n} exceeds the enumeration limit {limit}")
    out: list[int] = []
    _branch_maximal(n, 1, 0, 0, (1 << n) - 1, out)
    ground = GroundSet(n)
    return [IntSubset(ground, m) for m in sorted(out, key=_mask_sort_key)]


def _mask_sort_key(mask: int) -> tuple[int, ...]:
    return tuple(iter_mask(mask))


def _split_tasks(n: int, workers: int) -> list[tuple[int, int, int, int]]:
    """Prefix tasks for the worker pool: all sum-free prefixes over [d]."""
    d = 1
    while d < n and _branch_count(d, 1, 0, 0) < 4 * workers:
        d += 1

    tasks: list[tuple[int, int, int, int]] = []

    def rec(start: int, mask: int, sums: int) -> None:
        if start > d:
            tasks.append((n, d + 1, mask, sums))
            return
        rec(start + 1, mask, sums)
        if mask_can_add(mask, sums, start):
            t = mask | (1 << (start - 1))
            rec(start + 1, t, sums | (t << start))

    rec(1, 0, 0)
    return tasks


def _count_task(task: tuple[int, int, int, int]) -> int:
    n, start, mask, sums = task
    return _branch_count(n, start, mask, sums)


def _max_task(task: tuple[int, int, int, int]) -> int:
    n, start, mask, sums = task
    return _branch_maximal(n, start, mask, sums, (1 << n) - 1, None)


def sum_free_subsets_of(members: Sequence[int]) -> list[int]:
    """Masks of all sum-free subsets of an arbitrary integer set."""
    elems = sorted(members)
    out: list[int] = []

    def rec(pos: int, mask: int, sums: int) -> None:
        if pos == len(elems):
            out.append(mask)
            return
        x = elems[pos]
        rec(pos + 1, mask, sums)
        if mask_can_add(mask, sums, x):
            t = mask | (1 << (x - 1))
            rec(pos + 1, t, sums | (t << x))

    rec(0, 0, 0)
    return out


# ---------------------------------------------------------------------------
# two-step enumeration through link graphs
# ---------------------------------------------------------------------------


def two_step_enumerate(f1: IntSubset, f2: IntSubset, n: int) -> list[IntSubset]:
    """Maximal sum-free subsets of [n] contained in F1 + F2, built by fixing
    a sum-free seed S in F1 and extending it by a maximal independent set of
    the link graph of S on F2.

    F1 and F2 must be disjoint and F2 itself sum-free (the seed-extension
    correspondence needs both the seed and the extension side sum-free).
    """
    if f1.mask & f2.mask:
        raise ValueError("the two parts must be disjoint")
    if not mask_is_sum_free(f2.mask):
        raise ValueError("the extension part must be sum-free")
    ground = GroundSet(n)
    universe = ground.universe_mask
    b_members = f2.members
    found: set[int] = set()
    for seed_mask in sum_free_subsets_of(f1.members):
        link = link_graph_ints(list(iter_mask(seed_mask)), b_members)
        for ind in enumerate_mis(link):
            m = seed_mask
            for v in ind:
                m |= 1 << (v - 1)
            if m in found:
                continue
            if _leaf_is_maximal(m, _sums_of(m), universe):
                found.add(m)
    return [IntSubset(ground, m) for m in sorted(found, key=_mask_sort_key)]


# ---------------------------------------------------------------------------
# refined counts for the upper-half family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RefinedCounts:
    """Counts attached to one (n, m, S) choice: the number of maximal
    sum-free sets with minimum m and lower fringe S, the MIS count of the
    associated link graph, and the latter's ratio to 2^{n/4}."""

    n: int
    m: int
    s: tuple[int, ...]
    msf: int
    mis_link: int
    ratio_c: Optional[Fraction]  # exact when 4 | n
    ratio_scaled_4096: int  # round(mis_link * 2^12 / 2^{n/4}) otherwise

    def ratio_float(self) -> float:
        return self.mis_link / 2 ** (self.n / 4)


def refined_counts(n: int, m: int, s_members: Iterable[int]) -> RefinedCounts:
    s = tuple(sorted(s_members))
    s_mask = 0
    for e in s:
        s_mask |= 1 << (e - 1)
    seed_mask = s_mask | (1 << (m - 1))
    if not mask_is_sum_free(seed_mask):
        raise ValueError("S + {m} must be sum-free")
    if 2 * m > n:
        raise ValueError("m must lie in [1, n/2]")
    if any(2 * x > n for x in s):
        raise ValueError("S must lie inside [n/2]")
    if 2 * m in s:
        raise ValueError("2m must not lie in S")
    link = link_family(n, m, s)
    mis_link = count_mis(link)
    universe = (1 << n) - 1
    msf = 0
    for ind in enumerate_mis(link):
        mask = seed_mask
        for v in ind:
            mask |= 1 << (v - 1)
        # require minimum exactly m and leaf maximality
        if (mask & -mask).bit_length() != m:
            continue
        if _leaf_is_maximal(mask, _sums_of(mask), universe):
            msf += 1
    if n % 4 == 0:
        ratio: Optional[Fraction] = Fraction(mis_link, 1 << (n // 4))
    else:
        ratio = None
    scaled = round(mis_link * 4096 / 2 ** (n / 4))
    return RefinedCounts(n, m, s, msf, mis_link, ratio, scaled)


# ---------------------------------------------------------------------------
# maximal sets with exactly one even member
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SingleEvenCensus:
    n: int
    f_prime_max: int  # exact count of maximal sets with exactly one even member
    lower: int  # sum over evens minus twice the pairwise correction
    upper: int  # sum over evens of the single-even link MIS counts


def single_even_census(n: int, limit: int = 30) -> SingleEvenCensus:
    if n > limit:
        raise EnumerationLimitError(f"n = {n} exceeds the census limit {limit}")
    evens = list(range(2, n + 1, 2))
    upper = sum(count_mis(link_single_even(n, x)) for x in evens)
    pair_sum = 0
    for i, x in enumerate(evens):
        for x2 in evens[i + 1 :]:
            pair_sum += count_mis(link_pair_even(n, x, x2))
    exact = 0
    for mset in enumerate_maximal_sum_free(n):
        if sum(1 for e in mset if e % 2 == 0) == 1:
            exact += 1
    return SingleEvenCensus(n, exact, upper - 2 * pair_sum, upper)


# ---------------------------------------------------------------------------
# even-link sums and their closed forms
# ---------------------------------------------------------------------------


def even_link_term(m: int) -> int:
    """Predicted MIS count of the single-even link graph for even m greater
    than 2n/3: 2^{m/4} when m/2 is even, else 2^{(m-2)/4}."""
    if m % 2:
        raise ValueError("term defined for even m only")
    if (m // 2) % 2 == 0:
        return 1 << (m // 4)
    return 1 << ((m - 2) // 4)


@dataclass(frozen=True)
class EvenLinkSums:
    n: int
    total: int  # sum over all even x of MIS(L_x[odds])
    restricted: int  # same sum restricted to x > 2n/3
    restricted_formula: int  # per-term closed form summed over x > 2n/3
    geometric_closed_form: int  # per-term closed form summed over all even x

    def ratio(self) -> float:
        return self.total / 2 ** (self.n / 4)


def dprime_sum(n: int) -> EvenLinkSums:
    evens = list(range(2, n + 1, 2))
    per_m = {x: count_mis(link_single_even(n, x)) for x in evens}
    total = sum(per_m.values())
    restricted = sum(v for x, v in per_m.items() if 3 * x > 2 * n)
    restricted_formula = sum(even_link_term(x) for x in evens if 3 * x > 2 * n)
    geometric = sum(even_link_term(x) for x in evens)
    return EvenLinkSums(n, total, restricted, restricted_formula, geometric)


# ---------------------------------------------------------------------------
# sets with small sumset
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SumsetCensus:
    d: int
    s: int
    r: Fraction
    count: int  # exact number of S in [d], |S| = s, |S+S| <= r s
    bound: float  # 2^{delta s} C(r s / 2, s) d^{floor(r + delta)}
    delta: float


def small_sumset_count(
    d: int, s: int, r, delta: float = 1 / 9, limit: int = 10**8
) -> SumsetCensus:
    """Exact census of s-subsets of [d] with sumset at most r*s, next to the
    corresponding counting bound (informational: the bound's validity
    threshold in s is an unspecified constant)."""
    if s < 1 or d < s:
        raise ValueError("need 1 <= s <= d")
    if math.comb(d, s) > limit:
        raise EnumerationLimitError(f"C({d},{s}) exceeds the census limit {limit}")
    rr = Fraction(r).limit_denominator(10**6) if isinstance(r, float) else Fraction(r)
    threshold = rr * s
    count = 0
    for combo in combinations(range(1, d + 1), s):
        sums = {a + b for i, a in enumerate(combo) for b in combo[i:]}
        if len(sums) <= threshold:
            count += 1
    half = math.floor(rr * s / 2)
    bound = 2 ** (delta * s) * math.comb(half, s) * d ** math.floor(float(rr) + delta)
    return SumsetCensus(d, s, rr, count, float(bound), delta)
