"""Link graphs: edges on a vertex set B induced by Schur triples through S.

For subsets S, B of the ground structure, the link graph of S on B has
vertex set B and

  (i)  an edge x ~ y whenever some z in S makes {x, y, z} a Schur triple
       (unordered: x+y=z, x+z=y or y+z=x); z may coincide in value with x
       or y, which still yields the edge;
  (ii) a loop at x whenever {x, x, z} is a Schur triple for some z in S
       (2x = z) or {x, z, z'} is one for some z, z' in S (x in S+S or
       x in S-S).

Over a group, "Schur triple" means some ordering satisfies a + b = c.

The family built on the upper half, L(n, m, S) = link graph of S + {m} on
[n/2+1, n] with m <= n/2 and S inside [n/2], is the workhorse for counting
maximal sum-free sets whose minimum is m: its vertices in S+S and S+m all
carry loops, and with max(S + {m}) below min(B) the graph is triangle-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import Graph
from .group import AbelianGroup, GroupSubset
from .intset import GroundSet, IntSubset


@dataclass(frozen=True)
class LinkSpec:
    """Parameters of one link-graph instance; S and B share a ground
    structure and may overlap."""

    ground: Union[GroundSet, AbelianGroup]
    s: Union[IntSubset, GroupSubset]
    b: Union[IntSubset, GroupSubset]


@dataclass(frozen=True)
class LinkFamilySpec:
    """The upper-half family: link graph of S + {m} on [n/2+1, n]."""

    n: int
    m: int
    s: IntSubset

    def __post_init__(self) -> None:
        if self.m < 1 or 2 * self.m > self.n:
            raise ValueError(f"m = {self.m} must lie in [1, n/2]")
        if any(2 * x > self.n for x in self.s):
            raise ValueError("S must lie inside [n/2]")


def link_graph(spec: LinkSpec) -> Graph:
    if isinstance(spec.ground, GroundSet):
        assert isinstance(spec.s, IntSubset) and isinstance(spec.b, IntSubset)
        return link_graph_ints(spec.s.members, spec.b.members)
    assert isinstance(spec.s, GroupSubset) and isinstance(spec.b, GroupSubset)
    return link_graph_group(spec.ground, spec.s, spec.b)


def link_graph_ints(s_members, b_members) -> Graph:
    """Integer link graph; vertex labels are the elements of B."""
    s = set(s_members)
    b = sorted(set(b_members))
    edges = []
    for i, x in enumerate(b):
        for y in b[i + 1 :]:
            if (x + y) in s or (y - x) in s:
                edges.append((x, y))
    sums = {z + w for z in s for w in s}
    diffs = {z - w for z in s for w in s if z > w}
    loops = [x for x in b if 2 * x in s or x in sums or x in diffs]
    return Graph.build(b, edges, loops)


def link_graph_group(group: AbelianGroup, s: GroupSubset, b: GroupSubset) -> Graph:
    """Group link graph; vertex labels are flattened element indices."""
    mem = s.members
    bs = b.sorted_members()
    edges = []
    for i, x in enumerate(bs):
        for y in bs[i + 1 :]:
            if (
                group.add(x, y) in mem
                or group.sub(y, x) in mem
                or group.sub(x, y) in mem
            ):
                edges.append((group.index_of(x), group.index_of(y)))
    sums = {group.add(z, w) for z in mem for w in mem}
    diffs = {group.sub(z, w) for z in mem for w in mem}
    loops = [
        group.index_of(x)
        for x in bs
        if group.add(x, x) in mem or x in sums or x in diffs
    ]
    return Graph.build([group.index_of(x) for x in bs], edges, loops)


def link_family(n: int, m: int, s_members=()) -> Graph:
    """L(n, m, S): link graph of S + {m} on the upper half [n/2+1, n]."""
    spec = LinkFamilySpec(n, m, IntSubset.of(n, s_members))
    upper = range(n // 2 + 1, n + 1)
    return link_graph_ints(set(spec.s.members) | {m}, upper)


def link_single_even(n: int, x: int) -> Graph:
    """Link graph of one even number on the odd part of [n]."""
    if x % 2 or not 1 <= x <= n:
        raise ValueError(f"x = {x} must be an even member of [{n}]")
    odds = range(1, n + 1, 2)
    return link_graph_ints({x}, odds)


def link_pair_even(n: int, x: int, x2: int) -> Graph:
    """Link graph of two distinct even numbers on the odd part of [n]."""
    if x == x2:
        raise ValueError("the two even numbers must be distinct")
    for v in (x, x2):
        if v % 2 or not 1 <= v <= n:
            raise ValueError(f"{v} must be an even member of [{n}]")
    odds = range(1, n + 1, 2)
    return link_graph_ints({x, x2}, odds)
