import random

import pytest

from interiorpoly.graph import Side, VertexSet, build, is_nonexpanding, neighborhood
from interiorpoly.matching import choose_nonexpanding, hall_violator, maximum_matching

from support import brute_max_matching, brute_violator_exists, complete, random_graph

K23 = complete(2, 3)


def test_maximum_matching_examples():
    # Frozen from brute_max_matching: K23 has maximum matching size 2.
    assert brute_max_matching(K23) == 2
    m_w = maximum_matching(K23, Side.W)
    assert len(m_w) == 2
    assert not m_w.saturates(K23.full(Side.W))
    m_v = maximum_matching(K23, Side.V)
    assert len(m_v) == 2
    assert m_v.saturates(K23.full(Side.V))
    assert len(maximum_matching(build(3, 3, []), Side.V)) == 0


def test_matching_is_deterministic():
    assert maximum_matching(K23, Side.V).pairs == ((0, 0), (1, 1))


def test_hall_violator_examples():
    x = hall_violator(K23, K23.full(Side.W))
    assert x == K23.full(Side.W)
    assert len(x) > len(neighborhood(K23, x))
    assert hall_violator(K23, VertexSet.of(Side.W, [0, 1])) is None
    assert hall_violator(K23, VertexSet(Side.W)) is None


def test_choose_nonexpanding_examples():
    assert choose_nonexpanding(complete(1, 1)) == (VertexSet.of(Side.V, [0]), "leaf")
    assert choose_nonexpanding(K23) == (K23.full(Side.W), "class")
    k33 = complete(3, 3)
    assert choose_nonexpanding(k33) == (k33.full(Side.V), "class")
    assert choose_nonexpanding(build(2, 2, [])) is None


def test_choose_nonexpanding_violator_branch():
    # No leaves. V (7 vertices, two isolated) is the larger class, but its
    # non-isolated part {v0..v4} has 7 neighbours. v0, v1, v2 share only
    # w0, w1, so a Hall violator sits inside it.
    edges = [(i, j) for i in range(3) for j in range(2)]
    edges += [(i, j) for i in (3, 4) for j in range(2, 7)]
    g = build(7, 7, edges)
    s, tag = choose_nonexpanding(g)
    assert tag == "violator"
    assert s.issubset(VertexSet.of(Side.V, [0, 1, 2]))
    assert is_nonexpanding(g, s)


def test_choose_nonexpanding_other_class_fallback():
    # v0, v1 each see w0, w1, w2; v2, v3 isolated. V is larger but expands
    # and can be saturated, so the W class is chosen.
    g = build(4, 3, [(i, j) for i in range(2) for j in range(3)])
    s, tag = choose_nonexpanding(g)
    assert (s, tag) == (g.full(Side.W), "class")


def test_matching_agrees_with_brute_force():
    rng = random.Random(11)
    for _ in range(300):
        g = random_graph(rng, 10)
        size = brute_max_matching(g)
        for side in (Side.V, Side.W):
            m = maximum_matching(g, side)
            assert len(m) == size
            assert all(e in g.edge_set for e in m.as_edges())
            assert len({a for a, _ in m.pairs}) == len({b for _, b in m.pairs}) == len(m)


def test_hall_consistency():
    rng = random.Random(12)
    for _ in range(400):
        g = random_graph(rng, 10)
        side = rng.choice([Side.V, Side.W])
        s = VertexSet(side, rng.randrange(1 << g.count(side)) if g.count(side) else 0)
        x = hall_violator(g, s)
        saturated = maximum_matching(g, side, within=s).saturates(s)
        assert (x is None) == saturated
        assert (x is None) == (not brute_violator_exists(g, s))
        if x is not None:
            assert x.issubset(s)
            assert len(x) > len(neighborhood(g, x))


def test_choose_nonexpanding_properties():
    rng = random.Random(13)
    n = 0
    while n < 300:
        g = random_graph(rng, 10)
        if not g.edges:
            continue
        n += 1
        s, _ = choose_nonexpanding(g)
        assert len(s) >= 1
        assert is_nonexpanding(g, s)
        assert all(g.degree(s.side, i) >= 1 for i in s)


@pytest.mark.parametrize("side", [Side.V, Side.W])
def test_within_restricts_matching(side):
    m = maximum_matching(K23, side, within=VertexSet.of(side, [1]))
    assert [a for a, _ in m.pairs] == [1]
