"""Maximum matchings, Hall violators and non-expanding set selection."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import BipartiteGraph, Side, VertexSet, bits, neighborhood

INF = float("inf")


@dataclass(frozen=True)
class Matching:
    """A matching listed as ``(saturating-side vertex, other-side vertex)`` pairs."""

    side: Side
    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def matched(self) -> VertexSet:
        return VertexSet.of(self.side, (a for a, _ in self.pairs))

    def saturates(self, s: VertexSet) -> bool:
        return s.issubset(self.matched)

    def as_edges(self) -> list[tuple[int, int]]:
        """Pairs as ``(v, w)`` edges of the underlying graph."""
        if self.side is Side.V:
            return list(self.pairs)
        return [(b, a) for a, b in self.pairs]


def _hopcroft_karp(adj: Sequence[int], left_mask: int) -> tuple[dict[int, int], dict[int, int]]:
    """Maximum matching from the ``left_mask`` vertices into the other side.

    Vertices and neighbours are visited in ascending order, so the result is
    reproducible.
    """
    left = list(bits(left_mask))
    nbrs = {u: list(bits(adj[u])) for u in left}
    mate_l: dict[int, int] = {}
    mate_r: dict[int, int] = {}

    while True:
        # BFS layering from free left vertices.
        dist: dict[int, float] = {}
        queue: deque[int] = deque()
        for u in left:
            if u not in mate_l:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                m = mate_r.get(w)
                if m is None:
                    found = True
                elif m not in dist:
                    dist[m] = dist[u] + 1
                    queue.append(m)
        if not found:
            return mate_l, mate_r

        def augment(u: int) -> bool:
            for w in nbrs[u]:
                m = mate_r.get(w)
                if m is None or (dist.get(m) == dist[u] + 1 and augment(m)):
                    mate_l[u] = w
                    mate_r[w] = u
                    return True
            dist[u] = INF
            return False

        for u in left:
            if u not in mate_l:
                augment(u)


def maximum_matching(g: BipartiteGraph, side: Side = Side.V, within: VertexSet | None = None) -> Matching:
    """Maximum-cardinality matching of ``side`` vertices (optionally only ``within``)."""
    left_mask = g.full(side).mask if within is None else within.mask
    mate_l, _ = _hopcroft_karp(g.adjacency(side), left_mask)
    return Matching(side, tuple(sorted(mate_l.items())))


def hall_violator(g: BipartiteGraph, s: VertexSet) -> VertexSet | None:
    """Return ``X ⊆ s`` with ``|X| > |N(X)|``, or None when a matching saturates ``s``.

    ``X`` is the lowest unmatched vertex of ``s`` together with every
    ``s`` vertex reachable from it by alternating paths.
    """
    adj = g.adjacency(s.side)
    mate_l, mate_r = _hopcroft_karp(adj, s.mask)
    free = [u for u in bits(s.mask) if u not in mate_l]
    if not free:
        return None
    root = free[0]
    x = 1 << root
    seen_w = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in bits(adj[u] & ~seen_w):
            seen_w |= 1 << w
            # w must be matched, else the matching was not maximum
            m = mate_r[w]
            if not x >> m & 1:
                x |= 1 << m
                queue.append(m)
    return VertexSet(s.side, x)


def _with_edges(g: BipartiteGraph, side: Side) -> VertexSet:
    adj = g.adjacency(side)
    return VertexSet.of(side, (i for i in range(g.count(side)) if adj[i]))


def choose_nonexpanding(g: BipartiteGraph) -> tuple[VertexSet, str] | None:
    """Pick a non-expanding set whose members all have degree at least one.

    Preference order: a single degree-1 vertex (``"leaf"``), the larger colour
    class minus its isolated vertices (``"class"``), a Hall violator inside it
    (``"violator"``), and finally the other class (``"class"``). Returns None
    for an edgeless graph.
    """
    if not g.edges:
        return None
    for side in (Side.V, Side.W):
        for i, nb in enumerate(g.adjacency(side)):
            if nb.bit_count() == 1:
                return VertexSet.of(side, (i,)), "leaf"

    big = Side.V if g.v_count >= g.w_count else Side.W
    s = _with_edges(g, big)
    if len(s) >= len(neighborhood(g, s)):
        return s, "class"
    x = hall_violator(g, s)
    if x is not None:
        return x, "violator"
    # Restricted to non-isolated vertices, N(s) is exactly the other restricted class.
    return _with_edges(g, big.other), "class"
