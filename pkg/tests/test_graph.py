"""Graphs with loops: families, products, queries, isomorphism, text format."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumfree.graph import (
    Graph,
    are_isomorphic,
    cartesian_product,
    check_isomorphism_map,
    complete,
    connected_components,
    cycle,
    degree_stats,
    disjoint_p3_packing,
    disjoint_union,
    from_text,
    is_triangle_free,
    matching,
    path,
    prism,
    relabel,
    to_text,
)


@st.composite
def random_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=10))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    loops = draw(st.sets(st.integers(min_value=0, max_value=n - 1)))
    return Graph.build(range(n), edges, loops)


def test_family_sizes():
    assert prism().num_vertices == 6 and prism().edge_count() == 9
    assert matching(3).num_vertices == 6 and matching(3).edge_count() == 3
    du = disjoint_union(path(3), relabel(path(3), {i: i + 3 for i in range(3)}))
    assert du.num_vertices == 6 and du.edge_count() == 4
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        path(0)


def test_triangle_free():
    assert is_triangle_free(cycle(5))
    assert not is_triangle_free(complete(3))
    c4_loop = Graph.build(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)], [0])
    assert is_triangle_free(c4_loop)  # loops never form triangles


def test_degree_stats():
    lone_loop = Graph.build([0], [], [0])
    assert degree_stats(lone_loop) == (2, 2, 1)
    assert degree_stats(path(3)) == (1, 2, 2)
    assert degree_stats(Graph.build(range(4))) == (0, 0, 0)


def test_p3_packing():
    four = path(3)
    for k in range(1, 4):
        four = disjoint_union(four, relabel(path(3), {i: i + 3 * k for i in range(3)}))
    assert disjoint_p3_packing(four) == 4
    assert disjoint_p3_packing(matching(5)) == 0
    assert disjoint_p3_packing(path(6)) == 2
    # greedy fallback still certifies a lower bound
    assert disjoint_p3_packing(path(40), exact_limit=10) >= 13


def test_isomorphism_map():
    p3 = path(3)
    assert check_isomorphism_map(p3, p3, {0: 0, 1: 1, 2: 2})
    assert not check_isomorphism_map(p3, p3, {0: 1, 1: 0, 2: 2})
    c4 = cycle(4)
    assert check_isomorphism_map(c4, c4, {0: 1, 1: 2, 2: 3, 3: 0})
    with pytest.raises(ValueError):
        check_isomorphism_map(p3, p3, {0: 0, 1: 1})


def test_are_isomorphic():
    assert are_isomorphic(path(3), relabel(path(3), {0: 5, 1: 9, 2: 7}))
    two_k3 = disjoint_union(complete(3), relabel(complete(3), {i: i + 3 for i in range(3)}))
    assert not are_isomorphic(cycle(6), two_k3)
    assert not are_isomorphic(matching(2), path(4))


def test_product_and_components():
    g = cartesian_product(complete(3), complete(2))
    assert g.num_vertices == 6
    assert are_isomorphic(g, prism())
    comps = connected_components(disjoint_union(cycle(3), relabel(cycle(4), {i: i + 10 for i in range(4)})))
    assert sorted(c.num_vertices for c in comps) == [3, 4]


@given(
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=1, max_value=5),
)
def test_product_degrees_add(a, b):
    g, h = complete(a) if a > 1 else path(1), cycle(b + 2)
    gh = cartesian_product(g, h)
    assert gh.num_vertices == g.num_vertices * h.num_vertices
    dg = degree_stats(g)
    dh = degree_stats(h)
    assert degree_stats(gh)[0] == dg[0] + dh[0]
    assert degree_stats(gh)[1] == dg[1] + dh[1]


@given(random_graphs())
@settings(max_examples=80)
def test_loop_degree_rule(g):
    _, _, e = degree_stats(g)
    degs = [g.degree(v) for v in g.labels]
    assert sum(degs) == 2 * e
    for i, v in enumerate(g.labels):
        base = g.nbr[i].bit_count()
        assert g.degree(v) == base + (2 if g.has_loop(v) else 0)


@given(random_graphs())
@settings(max_examples=80)
def test_text_round_trip(g):
    assert from_text(to_text(g)) == g


@given(random_graphs())
@settings(max_examples=40)
def test_relabel_is_isomorphic(g):
    shifted = relabel(g, {v: v * 3 + 1 for v in g.labels})
    mapping = {v: v * 3 + 1 for v in g.labels}
    assert check_isomorphism_map(g, shifted, mapping)
    assert are_isomorphic(g, shifted)
