"""Exact counting and enumeration of maximal independent sets (MIS).

On a graph with loops, a loop vertex can never join an independent set and
never blocks the maximality of the others beyond its ordinary edges, so
counting deletes every loop vertex first and counts on the remainder.

Counting works per connected component and multiplies the results.  Inside a
component the recursion is the classic candidates/excluded scheme: the number
of maximal independent sets extending the current choice depends only on the
pair (candidates, excluded), so results are memoised on that pair.  The pivot
rule branches over a closed neighbourhood, which keeps the branch factor at
degree + 1 on the sparse structured graphs this package produces.

Enumeration shares the same recursion without the memo table and returns sets
in canonical order (lexicographic on sorted vertex labels).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import (
    Graph,
    _bits,
    connected_components,
    cycle,
    degree_stats,
    disjoint_p3_packing,
    induced_subgraph,
    is_triangle_free,
)


class EnumerationLimitError(RuntimeError):
    """Raised when an exact computation would exceed its configured cap."""


@dataclass(frozen=True)
class MisResult:
    count: int
    sets: Optional[tuple[tuple[int, ...], ...]]  # |sets| = count when present
    elapsed_ms: float


def mis_result(
    g: Graph, want_sets: bool = False, limit: int = 80, cap: int = 1_000_000
) -> MisResult:
    """Count (and optionally enumerate) with timing, as one record."""
    import time

    started = time.perf_counter()
    count = count_mis(g, limit=limit)
    sets = tuple(enumerate_mis(g, cap=cap)) if want_sets else None
    return MisResult(count, sets, (time.perf_counter() - started) * 1000.0)


def strip_loops(g: Graph) -> Graph:
    """Delete every loop vertex (with its incident edges).

    The maximal independent sets of the result are exactly those of the
    input, so the MIS count is preserved.
    """
    keep = [v for i, v in enumerate(g.labels) if not g.loops_mask >> i & 1]
    return induced_subgraph(g, keep)


def count_mis(g: Graph, limit: int = 80) -> int:
    """Exact number of maximal independent sets of `g`."""
    core = strip_loops(g)
    if core.num_vertices > limit:
        raise EnumerationLimitError(
            f"{core.num_vertices} loop-free vertices exceeds the limit {limit}"
        )
    total = 1
    for comp in connected_components(core):
        total *= _count_component(comp)
    return total


def enumerate_mis(g: Graph, cap: int = 1_000_000) -> list[tuple[int, ...]]:
    """All maximal independent sets, as sorted label tuples in canonical
    (lexicographic) order."""
    if count_mis(g) > cap:
        raise EnumerationLimitError(f"more than {cap} maximal independent sets")
    core = strip_loops(g)
    sets: list[tuple[int, ...]] = [()]
    for comp in connected_components(core):
        comp_sets = _enumerate_component(comp)
        sets = [s + c for s in sets for c in comp_sets]
    return sorted(tuple(sorted(s)) for s in sets)


def is_maximal_independent(g: Graph, vertices: tuple[int, ...]) -> bool:
    """Membership test equivalent to `tuple(sorted(v)) in enumerate_mis(g)`."""
    idx = {v: i for i, v in enumerate(g.labels)}
    chosen = 0
    for v in vertices:
        chosen |= 1 << idx[v]
    if chosen & g.loops_mask:
        return False
    dominated = chosen
    for i in _bits(chosen):
        if g.nbr[i] & chosen:
            return False
        dominated |= g.nbr[i]
    dominated |= g.loops_mask
    return dominated == (1 << g.num_vertices) - 1


def _pivot(cand: int, excl: int, allowed: list[int]) -> int:
    """Vertex of cand | excl whose closed non-neighbourhood in cand is
    smallest; deterministic for reproducible enumeration order."""
    pool = cand | excl
    pivot, best = -1, -1
    mm = pool
    while mm:
        low = mm & -mm
        u = low.bit_length() - 1
        mm ^= low
        outside = (cand & ~allowed[u] & ~low).bit_count()
        if pivot < 0 or outside < best:
            pivot, best = u, outside
    return pivot


def _count_component(comp: Graph) -> int:
    n = comp.num_vertices
    if n == 0:
        return 1
    full = (1 << n) - 1
    # allowed[v]: vertices that may still join an independent set with v
    allowed = [full & ~comp.nbr[i] & ~(1 << i) for i in range(n)]
    memo: dict[tuple[int, int], int] = {}

    def rec(cand: int, excl: int) -> int:
        if cand == 0:
            return 1 if excl == 0 else 0
        key = (cand, excl)
        hit = memo.get(key)
        if hit is not None:
            return hit
        branch = cand & ~allowed[_pivot(cand, excl, allowed)]
        total = 0
        c, x = cand, excl
        bb = branch
        while bb:
            low = bb & -bb
            v = low.bit_length() - 1
            bb ^= low
            total += rec(c & allowed[v], x & allowed[v])
            c &= ~low
            x |= low
        memo[key] = total
        return total

    return rec(full, 0)


def _enumerate_component(comp: Graph) -> list[tuple[int, ...]]:
    n = comp.num_vertices
    if n == 0:
        return [()]
    full = (1 << n) - 1
    allowed = [full & ~comp.nbr[i] & ~(1 << i) for i in range(n)]
    out: list[tuple[int, ...]] = []

    def rec(chosen: int, cand: int, excl: int) -> None:
        if cand == 0:
            if excl == 0:
                out.append(tuple(comp.labels[i] for i in _bits(chosen)))
            return
        branch = cand & ~allowed[_pivot(cand, excl, allowed)]
        c, x = cand, excl
        bb = branch
        while bb:
            low = bb & -bb
            v = low.bit_length() - 1
            bb ^= low
            rec(chosen | low, c & allowed[v], x & allowed[v])
            c &= ~low
            x |= low

    rec(0, full, 0)
    return out


_CYCLE_BASE: dict[int, int] = {}


def mis_cycle(m: int) -> int:
    """MIS count of the m-cycle via the recurrence
    MIS(C_m) = MIS(C_{m-2}) + MIS(C_{m-3}), with brute-forced base cases."""
    if m < 3:
        raise ValueError("cycles need m >= 3")
    if not _CYCLE_BASE:
        for base in (3, 4, 5):
            _CYCLE_BASE[base] = count_mis(cycle(base))
    vals = dict(_CYCLE_BASE)
    for k in range(6, m + 1):
        vals[k] = vals[k - 2] + vals[k - 3]
    return vals[m]


@dataclass(frozen=True)
class BoundCheck:
    name: str
    applicable: bool
    bound_log2: Optional[float]
    holds: Optional[bool]


@dataclass(frozen=True)
class BoundCertificates:
    exact: int
    checks: tuple[BoundCheck, ...]

    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.applicable)


def _leq_power(count: int, base: int, expo: Fraction) -> bool:
    """count <= base**expo, decided exactly over the integers."""
    if count <= 0:
        return True
    num, den = expo.numerator, expo.denominator
    if num < 0:
        return count**den * base ** (-num) <= 1
    return count**den <= base**num


def bound_certificates(g: Graph, p3_exact_limit: int = 30) -> BoundCertificates:
    """Evaluate every applicable MIS upper bound against the exact count.

    Covered: the 3^{n/3} bound for simple graphs, the 2^{n/2} bound for
    triangle-free graphs, its refinement for dense triangle-free graphs, the
    removal variant for almost triangle-free graphs, the almost-regular
    bound, the disjoint-path refinement, and loop monotonicity (erasing
    loops never decreases the count).
    """
    exact = count_mis(g)
    n = g.num_vertices
    checks: list[BoundCheck] = []
    simple = g.loops_mask == 0
    tfree = is_triangle_free(g)
    delta, big_delta, e = degree_stats(g)

    if simple:
        holds = _leq_power(exact, 3, Fraction(n, 3))
        checks.append(BoundCheck("moon-moser", True, n / 3 * math.log2(3), holds))
    else:
        checks.append(BoundCheck("moon-moser", False, None, None))

    if tfree:
        holds = _leq_power(exact, 2, Fraction(n, 2))
        checks.append(BoundCheck("triangle-free-half", True, n / 2, holds))
    else:
        checks.append(BoundCheck("triangle-free-half", False, None, None))

    # dense refinement: D = max degree, k = e - n/2, bound 2^{n/2 - k/(100 D^2)}
    if simple and tfree and big_delta >= 1:
        k = Fraction(2 * e - n, 2)
        expo = Fraction(n, 2) - k / (100 * big_delta * big_delta)
        checks.append(
            BoundCheck("dense-triangle-free", True, float(expo), _leq_power(exact, 2, expo))
        )
    else:
        checks.append(BoundCheck("dense-triangle-free", False, None, None))

    # removal variant: delete a triangle-hitting set T, apply the dense
    # refinement to the rest, pay 2^{101 |T| / 100}
    if simple and big_delta >= 1:
        t_set = _triangle_hitting_set(g)
        rest = induced_subgraph(g, [v for v in g.labels if v not in t_set])
        np_, ep = rest.num_vertices, rest.edge_count()
        k = Fraction(2 * ep - np_, 2)
        expo = (
            Fraction(np_, 2)
            - k / (100 * big_delta * big_delta)
            + Fraction(101 * len(t_set), 100)
        )
        checks.append(
            BoundCheck("almost-triangle-free", True, float(expo), _leq_power(exact, 2, expo))
        )
    else:
        checks.append(BoundCheck("almost-triangle-free", False, None, None))

    # almost-regular: with Delta <= k delta and b = sqrt(delta),
    # MIS <= sum_{i <= n/b} C(n, i) * 3^{(k/(k+1)) n/3 + 2n/(3b)}
    if delta >= 1:
        kreg = max(1.0, big_delta / delta)
        b = math.sqrt(delta)
        coeff = sum(math.comb(n, i) for i in range(0, int(n / b) + 1))
        blog = math.log2(coeff) + (
            (kreg / (kreg + 1)) * n / 3 + 2 * n / (3 * b)
        ) * math.log2(3)
        holds = math.log2(max(exact, 1)) <= blog + 1e-9
        checks.append(BoundCheck("almost-regular", True, blog, holds))
    else:
        checks.append(BoundCheck("almost-regular", False, None, None))

    # path packing: triangle-free with k disjoint P_3s gives 2^{n/2 - k/25}
    if tfree:
        k3 = disjoint_p3_packing(g, exact_limit=p3_exact_limit)
        expo = Fraction(n, 2) - Fraction(k3, 25)
        checks.append(
            BoundCheck("path-packing", True, float(expo), _leq_power(exact, 2, expo))
        )
    else:
        checks.append(BoundCheck("path-packing", False, None, None))

    if not simple:
        erased = Graph(g.labels, g.nbr, 0)
        checks.append(
            BoundCheck("loop-monotone", True, None, exact <= count_mis(erased))
        )
    else:
        checks.append(BoundCheck("loop-monotone", False, None, None))

    return BoundCertificates(exact, tuple(checks))


def _triangle_hitting_set(g: Graph) -> set[int]:
    """Greedy vertex set whose removal leaves the graph triangle-free."""
    removed: set[int] = set()
    n = g.num_vertices
    active = (1 << n) - 1
    while True:
        tri = None
        for i in range(n):
            if not active >> i & 1:
                continue
            mi = g.nbr[i] & active
            for j in _bits(mi >> (i + 1) << (i + 1)):
                common = mi & g.nbr[j] & active
                if common:
                    k = (common & -common).bit_length() - 1
                    tri = (i, j, k)
                    break
            if tri:
                break
        if tri is None:
            return removed
        drop = max(tri, key=lambda v: (g.nbr[v] & active).bit_count())
        active &= ~(1 << drop)
        removed.add(g.labels[drop])
