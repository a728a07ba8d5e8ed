import random

import pytest
from hypothesis import given, strategies as st

from interiorpoly.errors import InvalidEdge, ParallelEdge, ResourceLimit
from interiorpoly.graph import (
    Side,
    VertexSet,
    build,
    components,
    delete_edges,
    delete_vertices,
    disjoint_union,
    is_nonexpanding,
    neighborhood,
    swap_sides,
)

from support import complete, random_graph

K23 = complete(2, 3)
PATH3 = build(2, 1, [(0, 0), (1, 0)])  # v0 - w0 - v1


@st.composite
def graphs(draw, max_side=5):
    nv = draw(st.integers(0, max_side))
    nw = draw(st.integers(0, max_side))
    pairs = [(i, j) for i in range(nv) for j in range(nw)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build(nv, nw, chosen)


def test_build_examples():
    assert K23.edge_count == 6
    single = build(1, 0, [])
    assert (single.v_count, single.w_count, single.edges) == (1, 0, ())
    with pytest.raises(ParallelEdge):
        build(2, 2, [(0, 0), (0, 0)])
    with pytest.raises(InvalidEdge):
        build(2, 2, [(2, 0)])
    with pytest.raises(InvalidEdge):
        build(2, 2, [(0, -1)])
    with pytest.raises(ResourceLimit):
        build(65, 1, [])


def test_labels_are_kept_but_not_compared():
    g = build(1, 1, [(0, 0)], labels=(["a"], ["b"]))
    assert g.v_labels == ("a",)
    assert g == build(1, 1, [(0, 0)])


def test_neighborhood_examples():
    w01 = VertexSet.of(Side.W, [0, 1])
    assert neighborhood(K23, w01) == VertexSet.of(Side.V, [0, 1])
    assert neighborhood(K23, VertexSet(Side.V)) == VertexSet(Side.W)
    assert neighborhood(PATH3, VertexSet.of(Side.V, [0])) == VertexSet.of(Side.W, [0])


def test_is_nonexpanding_examples():
    assert is_nonexpanding(K23, VertexSet.of(Side.W, [0, 1]))
    assert not is_nonexpanding(K23, VertexSet.of(Side.W, [0]))
    assert is_nonexpanding(K23, VertexSet(Side.W))


def test_delete_vertices_examples():
    assert delete_vertices(K23, VertexSet.of(Side.W, [0])).key() == complete(2, 2).key()
    g = delete_vertices(K23, VertexSet.of(Side.W, [0, 1]))
    assert g.key() == complete(2, 1).key()
    assert g.w_origin == (2,)
    assert delete_vertices(K23, VertexSet(Side.V)) == K23


def test_delete_edges_examples():
    c4 = complete(2, 2)
    p4 = delete_edges(c4, [(1, 1)])
    assert p4.edges == ((0, 0), (0, 1), (1, 0))
    assert p4.is_connected()
    assert delete_edges(c4, []) == c4
    assert delete_edges(c4, [(0, 1), (1, 0)]).edges == ((0, 0), (1, 1))
    with pytest.raises(InvalidEdge):
        delete_edges(PATH3, [(0, 1)])


def test_components_examples():
    g = build(2, 1, [(0, 0)])  # K11 plus isolated v1
    comps = components(g)
    assert [c.key() for c in comps] == [(1, 1, ((0, 0),)), (1, 0, ())]
    assert comps[1].v_origin == (1,)
    assert len(components(K23)) == 1
    assert len(components(build(2, 1, []))) == 3


def test_swap_examples():
    assert swap_sides(K23).key() == complete(3, 2).key()
    assert swap_sides(swap_sides(K23)) == K23
    s = swap_sides(build(1, 0, []))
    assert (s.v_count, s.w_count) == (0, 1)


@given(graphs(), st.data())
def test_neighborhood_monotone(g, data):
    side = data.draw(st.sampled_from([Side.V, Side.W]))
    full = (1 << g.count(side)) - 1
    big = data.draw(st.integers(0, full))
    small = data.draw(st.integers(0, full)) & big
    n_small = neighborhood(g, VertexSet(side, small))
    n_big = neighborhood(g, VertexSet(side, big))
    assert n_small.issubset(n_big)


@given(graphs(), st.data())
def test_delete_vertices_composes(g, data):
    side = data.draw(st.sampled_from([Side.V, Side.W]))
    full = (1 << g.count(side)) - 1
    j1 = data.draw(st.integers(0, full))
    j2 = data.draw(st.integers(0, full)) & ~j1
    once = delete_vertices(g, VertexSet(side, j1))
    # express j2 in the compacted indices of the intermediate graph
    origin = once.origin(side)
    j2_local = VertexSet.of(side, [k for k, o in enumerate(origin) if j2 >> o & 1])
    assert delete_vertices(once, j2_local) == delete_vertices(g, VertexSet(side, j1 | j2))


@given(graphs())
def test_components_partition(g):
    comps = components(g)
    vs = sorted(o for c in comps for o in c.v_origin)
    ws = sorted(o for c in comps for o in c.w_origin)
    assert vs == list(range(g.v_count))
    assert ws == list(range(g.w_count))
    edges = sorted((c.v_origin[i], c.w_origin[j]) for c in comps for i, j in c.edges)
    assert edges == list(g.edges)
    assert all(len(components(c)) == 1 for c in comps)


@given(graphs())
def test_swap_involution(g):
    assert swap_sides(swap_sides(g)) == g
    assert swap_sides(g).edge_count == g.edge_count


def test_disjoint_union_sizes():
    rng = random.Random(3)
    for _ in range(20):
        a, b = random_graph(rng, 5), random_graph(rng, 5)
        u = disjoint_union(a, b)
        assert u.edge_count == a.edge_count + b.edge_count
        assert len(components(u)) == len(components(a)) + len(components(b))
