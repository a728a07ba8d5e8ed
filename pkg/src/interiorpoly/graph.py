"""Bipartite graphs with two colour classes and bitmask vertex subsets.

Vertices on each side are indexed ``0 .. count-1``. Every graph also carries
the indices its vertices had in the graph it was derived from (``v_origin``
and ``w_origin``), so subgraphs produced by deletions can be keyed exactly
against the input graph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InvalidEdge, ParallelEdge, ResourceLimit

MAX_SIDE = 64


class Side(enum.Enum):
    V = "V"
    W = "W"

    @property
    def other(self) -> Side:
        return Side.W if self is Side.V else Side.V


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class VertexSet:
    """A subset of one colour class, stored as a bitmask of local indices."""

    side: Side
    mask: int = 0

    @classmethod
    def of(cls, side: Side, indices: Iterable[int] = ()) -> VertexSet:
        return cls(side, mask_of(indices))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __or__(self, other: VertexSet) -> VertexSet:
        if other.side is not self.side:
            raise ValueError("cannot combine vertex sets from different sides")
        return VertexSet(self.side, self.mask | other.mask)

    def issubset(self, other: VertexSet) -> bool:
        return self.side is other.side and self.mask & ~other.mask == 0

    def indices(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))


@dataclass(frozen=True, eq=True)
class BipartiteGraph:
    """Immutable simple bipartite graph.

    ``edges`` holds ``(i, j)`` pairs sorted ascending, ``i`` on the V side and
    ``j`` on the W side. Use :func:`build` to construct one with validation.
    """

    v_count: int
    w_count: int
    edges: tuple[tuple[int, int], ...]
    v_origin: tuple[int, ...] = field(default=None)  # type: ignore[assignment]
    w_origin: tuple[int, ...] = field(default=None)  # type: ignore[assignment]
    v_labels: tuple[str, ...] | None = field(default=None, compare=False)
    w_labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.v_origin is None:
            object.__setattr__(self, "v_origin", tuple(range(self.v_count)))
        if self.w_origin is None:
            object.__setattr__(self, "w_origin", tuple(range(self.w_count)))

    def count(self, side: Side) -> int:
        return self.v_count if side is Side.V else self.w_count

    @property
    def vertex_count(self) -> int:
        return self.v_count + self.w_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def v_adj(self) -> tuple[int, ...]:
        """For each V vertex, the bitmask of its W neighbours."""
        adj = [0] * self.v_count
        for i, j in self.edges:
            adj[i] |= 1 << j
        return tuple(adj)

    @cached_property
    def w_adj(self) -> tuple[int, ...]:
        adj = [0] * self.w_count
        for i, j in self.edges:
            adj[j] |= 1 << i
        return tuple(adj)

    def adjacency(self, side: Side) -> tuple[int, ...]:
        return self.v_adj if side is Side.V else self.w_adj

    def degree(self, side: Side, i: int) -> int:
        return self.adjacency(side)[i].bit_count()

    def full(self, side: Side) -> VertexSet:
        return VertexSet(side, (1 << self.count(side)) - 1)

    def origin(self, side: Side) -> tuple[int, ...]:
        return self.v_origin if side is Side.V else self.w_origin

    def key(self) -> tuple[int, int, tuple[tuple[int, int], ...]]:
        """Structure only: sizes and edges, ignoring origins and labels."""
        return (self.v_count, self.w_count, self.edges)

    def is_connected(self) -> bool:
        return len(components(self)) == 1

    def __str__(self) -> str:
        return f"BipartiteGraph(|V|={self.v_count}, |W|={self.w_count}, |E|={self.edge_count})"


def build(
    v_count: int,
    w_count: int,
    edge_list: Iterable[Sequence[int]],
    labels: tuple[Sequence[str], Sequence[str]] | None = None,
) -> BipartiteGraph:
    """Validate an edge list and return the graph.

    Raises:
        InvalidEdge: an index is out of range.
        ParallelEdge: a pair occurs twice.
        ResourceLimit: a side has more than 64 vertices.
    """
    if v_count < 0 or w_count < 0:
        raise InvalidEdge("vertex counts must be non-negative")
    if v_count > MAX_SIDE or w_count > MAX_SIDE:
        raise ResourceLimit(f"at most {MAX_SIDE} vertices per side are supported")
    seen: set[tuple[int, int]] = set()
    for e in edge_list:
        i, j = int(e[0]), int(e[1])
        if not (0 <= i < v_count and 0 <= j < w_count):
            raise InvalidEdge(f"edge ({i}, {j}) out of range for sides of size {v_count} and {w_count}")
        if (i, j) in seen:
            raise ParallelEdge(f"edge ({i}, {j}) appears more than once")
        seen.add((i, j))
    v_labels = w_labels = None
    if labels is not None:
        v_labels, w_labels = tuple(labels[0]), tuple(labels[1])
        if len(v_labels) != v_count or len(w_labels) != w_count:
            raise ValueError("label counts must match vertex counts")
    return BipartiteGraph(v_count, w_count, tuple(sorted(seen)), v_labels=v_labels, w_labels=w_labels)


def neighborhood(g: BipartiteGraph, s: VertexSet) -> VertexSet:
    adj = g.adjacency(s.side)
    m = 0
    for i in s:
        m |= adj[i]
    return VertexSet(s.side.other, m)


def is_nonexpanding(g: BipartiteGraph, s: VertexSet) -> bool:
    return len(s) >= len(neighborhood(g, s))


def induced(g: BipartiteGraph, vmask: int, wmask: int) -> BipartiteGraph:
    """Subgraph induced on the kept vertices, re-indexed compactly."""
    vkeep = list(bits(vmask))
    wkeep = list(bits(wmask))
    vpos = {old: new for new, old in enumerate(vkeep)}
    wpos = {old: new for new, old in enumerate(wkeep)}
    edges = tuple(sorted((vpos[i], wpos[j]) for i, j in g.edges if i in vpos and j in wpos))
    return BipartiteGraph(
        len(vkeep),
        len(wkeep),
        edges,
        tuple(g.v_origin[i] for i in vkeep),
        tuple(g.w_origin[j] for j in wkeep),
        tuple(g.v_labels[i] for i in vkeep) if g.v_labels else None,
        tuple(g.w_labels[j] for j in wkeep) if g.w_labels else None,
    )


def delete_vertices(g: BipartiteGraph, j: VertexSet) -> BipartiteGraph:
    """Remove the vertices in ``j`` and their incident edges."""
    if j.mask >> g.count(j.side):
        raise InvalidEdge("vertex index out of range")
    vmask = g.full(Side.V).mask
    wmask = g.full(Side.W).mask
    if j.side is Side.V:
        vmask &= ~j.mask
    else:
        wmask &= ~j.mask
    return induced(g, vmask, wmask)


def delete_edges(g: BipartiteGraph, f: Iterable[Sequence[int]]) -> BipartiteGraph:
    """Remove the given edges, keeping every vertex."""
    drop = {(int(e[0]), int(e[1])) for e in f}
    missing = drop - g.edge_set
    if missing:
        raise InvalidEdge(f"not edges of the graph: {sorted(missing)}")
    return BipartiteGraph(
        g.v_count,
        g.w_count,
        tuple(e for e in g.edges if e not in drop),
        g.v_origin,
        g.w_origin,
        g.v_labels,
        g.w_labels,
    )


def component_masks(v_adj: Sequence[int], w_adj: Sequence[int], vmask: int, wmask: int) -> list[tuple[int, int]]:
    """Connected components of the subgraph induced on ``(vmask, wmask)``.

    Components are listed by their lowest V vertex, then isolated W vertices
    by index.
    """
    out = []
    vleft, wleft = vmask, wmask
    while vleft or wleft:
        if vleft:
            cv, cw = vleft & -vleft, 0
        else:
            cv, cw = 0, wleft & -wleft
        fv, fw = cv, cw
        while fv or fw:
            nw = 0
            for i in bits(fv):
                nw |= v_adj[i]
            nv = 0
            for j in bits(fw):
                nv |= w_adj[j]
            nw &= wmask & ~cw
            nv &= vmask & ~cv
            cv |= nv
            cw |= nw
            fv, fw = nv, nw
        out.append((cv, cw))
        vleft &= ~cv
        wleft &= ~cw
    return out


def components(g: BipartiteGraph) -> list[BipartiteGraph]:
    masks = component_masks(g.v_adj, g.w_adj, g.full(Side.V).mask, g.full(Side.W).mask)
    return [induced(g, vm, wm) for vm, wm in masks]


def swap_sides(g: BipartiteGraph) -> BipartiteGraph:
    return BipartiteGraph(
        g.w_count,
        g.v_count,
        tuple(sorted((j, i) for i, j in g.edges)),
        g.w_origin,
        g.v_origin,
        g.w_labels,
        g.v_labels,
    )


def disjoint_union(g1: BipartiteGraph, g2: BipartiteGraph) -> BipartiteGraph:
    """Place ``g2`` after ``g1`` on both sides. Origins are reset."""
    edges = list(g1.edges) + [(i + g1.v_count, j + g1.w_count) for i, j in g2.edges]
    return build(g1.v_count + g2.v_count, g1.w_count + g2.w_count, edges)
