"""Lattice points of dilated root polytopes and the interior polynomial they determine.

The root polytope of ``G`` is the convex hull of ``e_v + e_w`` over the edges
``vw``. An integer point of its ``s``-th dilation is recorded as a pair of
degree vectors ``(a, b)``: ``a`` over the V side and ``b`` over the W side,
each summing to ``s``.

Two ways of producing those points live here:

* :func:`lattice_points` builds the ``s``-th dilation as the set of all sums
  of ``s`` edge generators (iterated Minkowski addition). This is fast, but
  only complete because bipartite root polytopes are normal.
* :func:`membership` decides whether a given degree pair is a point of
  ``s * Q_G`` straight from the definition, via transportation feasibility.

The test suite checks the first against the second.
"""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import ConsistencyFailure, InvalidInput, ResourceLimit
from .graph import BipartiteGraph
from .polynomial import IntPolynomial, series_coeffs

DEFAULT_MAX_POINTS = 10_000_000

# Largest code we allow in an int64 array; leaves headroom for one addition.
_INT64_LIMIT = 2**62


class DegreePair(NamedTuple):
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.a)


@dataclass(frozen=True)
class EhrhartProfile:
    """Lattice counts ``values[s]`` for ``s = 0..n+1`` and the recovered polynomial."""

    values: tuple[int, ...]
    n: int
    interior: IntPolynomial


class _Codec:
    """Packs a degree pair into one integer, one base-``B`` digit per vertex."""

    def __init__(self, g: BipartiteGraph, max_s: int):
        self.nv, self.nw = g.v_count, g.w_count
        self.base = max_s + 1
        self.width = self.nv + self.nw
        self.vectorised = self.base**self.width < _INT64_LIMIT
        place = [self.base**k for k in range(self.width)]
        self.offsets = [place[i] + place[self.nv + j] for i, j in g.edges]

    def decode(self, code: int) -> DegreePair:
        digits = []
        for _ in range(self.width):
            code, d = divmod(code, self.base)
            digits.append(d)
        return DegreePair(tuple(digits[: self.nv]), tuple(digits[self.nv :]))


def _expand_numpy(prev: np.ndarray, offsets: Sequence[int], threads: int) -> np.ndarray:
    offs = np.asarray(offsets, dtype=np.int64)
    # Bound each chunk to about 4M candidates before deduplicating.
    per_chunk = max(1, 4_000_000 // max(1, prev.size))
    chunks = [offs[k : k + per_chunk] for k in range(0, offs.size, per_chunk)]

    def work(chunk: np.ndarray) -> np.ndarray:
        return np.unique((prev[:, None] + chunk[None, :]).ravel())

    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, chunks))
    else:
        parts = [work(c) for c in chunks]
    if len(parts) == 1:
        return parts[0]
    return np.unique(np.concatenate(parts))


def _dilations(g: BipartiteGraph, upto: int, max_points: int, threads: int = 1):
    """Yield ``(s, codes, codec)`` for ``s = 0..upto``; ``codes`` is an array or a set."""
    codec = _Codec(g, upto)
    if codec.vectorised:
        current: np.ndarray | set[int] = np.zeros(1, dtype=np.int64)
    else:
        current = {0}
    for s in range(upto + 1):
        if s > 0:
            if not codec.offsets:
                current = np.zeros(0, dtype=np.int64) if codec.vectorised else set()
            elif codec.vectorised:
                current = _expand_numpy(current, codec.offsets, threads)
            else:
                current = {p + o for p in current for o in codec.offsets}
            if len(current) > max_points:
                raise ResourceLimit(
                    f"dilation {s} has {len(current)} lattice points, above the cap of {max_points}"
                )
        yield s, current, codec


def lattice_points(
    g: BipartiteGraph, s: int, max_points: int = DEFAULT_MAX_POINTS, threads: int = 1
) -> set[DegreePair]:
    """All integer points of ``s * Q_G``, as degree pairs.

    ``s = 0`` gives the single zero point for every graph, edgeless or not.
    """
    if s < 0:
        raise InvalidInput("dilation must be non-negative")
    for k, codes, codec in _dilations(g, s, max_points, threads):
        if k == s:
            return {codec.decode(int(c)) for c in codes}
    raise AssertionError("unreachable")


def ehrhart_values(
    g: BipartiteGraph, m: int, max_points: int = DEFAULT_MAX_POINTS, threads: int = 1
) -> list[int]:
    """Lattice counts ``[1, eps(1), ..., eps(m)]``."""
    if m < 0:
        raise InvalidInput("m must be non-negative")
    out = []
    for s, codes, _ in _dilations(g, m, max_points, threads):
        out.append(1 if s == 0 else len(codes))
    return out


def max_flow(n: int, arcs: Iterable[tuple[int, int, int]], source: int, sink: int) -> int:
    """Edmonds-Karp on a small network; arcs are ``(tail, head, capacity)``."""
    cap: list[dict[int, int]] = [dict() for _ in range(n)]
    for u, v, c in arcs:
        cap[u][v] = cap[u].get(v, 0) + c
        cap[v].setdefault(u, 0)
    total = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v, c in cap[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            return total
        push = None
        v = sink
        while v != source:
            u = parent[v]
            push = cap[u][v] if push is None else min(push, cap[u][v])
            v = u
        v = sink
        while v != source:
            u = parent[v]
            cap[u][v] -= push
            cap[v][u] += push
            v = u
        total += push


def membership(g: BipartiteGraph, p: DegreePair | tuple[Sequence[int], Sequence[int]], s: int) -> bool:
    """Is ``(a, b)`` an integer point of ``s * Q_G``?

    A point of ``s * Q_G`` is a non-negative combination of edge generators
    with total weight ``s``, i.e. a transportation plan on the edges with
    supplies ``a`` and demands ``b``. Feasible iff the max flow equals ``s``.
    """
    a, b = tuple(p[0]), tuple(p[1])
    if len(a) != g.v_count or len(b) != g.w_count:
        raise InvalidInput("degree vectors do not match the graph's sides")
    if min(a + b, default=0) < 0:
        raise InvalidInput("degree vectors must be non-negative")
    if sum(a) != s or sum(b) != s:
        return False
    if s == 0:
        return True
    nv, nw = g.v_count, g.w_count
    src, dst = nv + nw, nv + nw + 1
    arcs = [(src, i, a[i]) for i in range(nv) if a[i]]
    arcs += [(nv + j, dst, b[j]) for j in range(nw) if b[j]]
    arcs += [(i, nv + j, s) for i, j in g.edges]
    return max_flow(nv + nw + 2, arcs, src, dst) == s


def box_scan(g: BipartiteGraph, s: int) -> set[DegreePair]:
    """Brute force: every point of ``{0..s}^(V+W)`` that passes :func:`membership`."""
    nv = g.v_count
    out = set()
    for point in itertools.product(range(s + 1), repeat=g.vertex_count):
        pair = DegreePair(point[:nv], point[nv:])
        if membership(g, pair, s):
            out.add(pair)
    return out


def affine_dimension(points: Iterable[DegreePair]) -> int:
    """Dimension of the affine hull of the points; -1 for no points."""
    rows = [p.a + p.b for p in points]
    if not rows:
        return -1
    arr = np.asarray(rows, dtype=np.int64)
    diffs = arr[1:] - arr[0]
    if diffs.size == 0:
        return 0
    return int(np.linalg.matrix_rank(diffs.astype(float)))


def ehrhart_profile(g: BipartiteGraph, max_points: int = DEFAULT_MAX_POINTS, threads: int = 1) -> EhrhartProfile:
    """Recover the interior polynomial from lattice counts and self-check it.

    With ``n = |V| + |W| - 1`` the generating function of the counts equals
    ``I(x) / (1 - x)**n``, so ``I`` is the binomial transform of the first
    ``n + 1`` counts. The count at ``n + 1`` is not used to build ``I`` and
    serves as an independent consistency check.
    """
    if g.vertex_count == 0:
        raise InvalidInput("the interior polynomial needs at least one vertex")
    n = g.vertex_count - 1
    values = ehrhart_values(g, n + 1, max_points, threads)
    coeffs = [sum((-1) ** j * comb(n, j) * values[k - j] for j in range(k + 1)) for k in range(n + 1)]
    interior = IntPolynomial(coeffs)
    if series_coeffs(interior, n, n + 1) != values:
        raise ConsistencyFailure(f"recovered polynomial {interior} does not reproduce counts {values}")
    return EhrhartProfile(tuple(values), n, interior)


def interior_via_ehrhart(g: BipartiteGraph, max_points: int = DEFAULT_MAX_POINTS, threads: int = 1) -> IntPolynomial:
    return ehrhart_profile(g, max_points, threads).interior
