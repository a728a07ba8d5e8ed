"""Recursive evaluation of the interior polynomial.

Two engines, both memoised on bitmask keys relative to the input graph:

``interior_nonexpanding``
    Deletes vertex subsets of a non-expanding colour class:
    ``I_G = sum over nonempty J ⊆ S of (-1)^(|J|-1) I_{G-J}``.

``interior_altcycle``
    Deletes edge subsets of one half of an alternating cycle
    ``e1, e(n+1), e2, e(n+2), ...``:
    ``I_G = sum over nonempty T ⊆ {e1..en} of (-1)^(|T|-1) I_{G\\T}``.

Both share the same reductions: a disconnected graph factors as
``(1 - x)^(c-1)`` times the product over its ``c`` components, a single
vertex evaluates to 1, and a degree-1 vertex can be deleted without changing
the value (leaf rule).

``alternating_sum`` evaluates the vertex-deletion sum directly with the
lattice-point oracle and does not use either engine.
"""

from __future__ import annotations

import threading
from collections import deque
from typing import Callable

from .errors import ConsistencyFailure, ResourceLimit
from .graph import BipartiteGraph, Side, VertexSet, bits, component_masks, delete_vertices
from .ehrhart import interior_via_ehrhart
from .polynomial import IntPolynomial, one_minus_x_pow

ONE = IntPolynomial((1,))

DEFAULT_MAX_TERMS_EXPONENT = 20


class MemoTable:
    """Thread-safe cache from subgraph keys to polynomials, with hit/miss counts.

    Concurrent callers may both compute a missing value; whichever stores
    first wins, and both results are identical by construction.
    """

    def __init__(self, enabled: bool = True):
        self.enabled = enabled
        self._data: dict = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        if not self.enabled:
            return None
        with self._lock:
            value = self._data.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, key, value: IntPolynomial) -> IntPolynomial:
        if not self.enabled:
            return value
        with self._lock:
            return self._data.setdefault(key, value)

    def items(self):
        with self._lock:
            return list(self._data.items())

    def __len__(self) -> int:
        return len(self._data)


def _signed_subset_sum(ground: int, term: Callable[[int], IntPolynomial]) -> IntPolynomial:
    """``sum over nonempty submasks T of ground`` of ``(-1)^(|T|-1) term(T)``."""
    acc = [0]
    sub = ground
    while sub:
        p = term(sub)
        sign = 1 if sub.bit_count() % 2 else -1
        coeffs = p.coeffs
        if len(coeffs) > len(acc):
            acc.extend([0] * (len(coeffs) - len(acc)))
        for k, c in enumerate(coeffs):
            acc[k] += sign * c
        sub = (sub - 1) & ground
    return IntPolynomial(acc)


def _product_rule(parts: list[IntPolynomial]) -> IntPolynomial:
    out = one_minus_x_pow(len(parts) - 1)
    for p in parts:
        out = out * p
    return out


# ---------------------------------------------------------------------------
# vertex-deletion engine


class _NonexpandingEngine:
    def __init__(self, g: BipartiteGraph, memo: MemoTable, max_exponent: int):
        self.v_adj = g.v_adj
        self.w_adj = g.w_adj
        self.memo = memo
        self.max_exponent = max_exponent

    def value(self, vm: int, wm: int) -> IntPolynomial:
        key = (vm, wm)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        return self.memo.put(key, self._compute(vm, wm))

    def _compute(self, vm: int, wm: int) -> IntPolynomial:
        comps = component_masks(self.v_adj, self.w_adj, vm, wm)
        if len(comps) > 1:
            return _product_rule([self.value(cv, cw) for cv, cw in comps])
        if vm.bit_count() + wm.bit_count() == 1:
            return ONE

        for i in bits(vm):
            if (self.v_adj[i] & wm).bit_count() == 1:
                return self.value(vm & ~(1 << i), wm)
        for j in bits(wm):
            if (self.w_adj[j] & vm).bit_count() == 1:
                return self.value(vm, wm & ~(1 << j))

        # Connected with >= 2 vertices, so no isolated vertex can enter S;
        # the larger class is non-expanding because N(S) is the other class.
        if vm.bit_count() >= wm.bit_count():
            s, adj, other = vm, self.v_adj, wm
        else:
            s, adj, other = wm, self.w_adj, vm
        if any(not adj[i] & other for i in bits(s)):
            raise ConsistencyFailure("non-expanding set contains an isolated vertex")
        if s.bit_count() > self.max_exponent:
            raise ResourceLimit(f"colour class of size {s.bit_count()} needs more than 2^{self.max_exponent} terms")
        if s is vm:
            return _signed_subset_sum(s, lambda j: self.value(vm & ~j, wm))
        return _signed_subset_sum(s, lambda j: self.value(vm, wm & ~j))


def interior_nonexpanding(
    g: BipartiteGraph,
    *,
    memo: MemoTable | None = None,
    use_memo: bool = True,
    max_exponent: int = DEFAULT_MAX_TERMS_EXPONENT,
) -> IntPolynomial:
    """Interior polynomial by non-expanding set deletion.

    Memo keys are ``(V-mask, W-mask)`` pairs over ``g``'s own indices. Pass a
    :class:`MemoTable` to inspect the cache afterwards.
    """
    if g.vertex_count == 0:
        raise ValueError("the interior polynomial needs at least one vertex")
    if memo is None:
        memo = MemoTable(enabled=use_memo)
    engine = _NonexpandingEngine(g, memo, max_exponent)
    return engine.value(g.full(Side.V).mask, g.full(Side.W).mask)


# ---------------------------------------------------------------------------
# alternating-cycle engine


def _shortest_cycle(nbrs: list[list[int]], nodes: list[int]) -> list[int] | None:
    """Vertex sequence of a shortest simple cycle, or None for a forest.

    BFS from every node in ascending order. A non-tree edge closes a walk
    through the root; it is accepted only if the two tree paths meet at the
    root alone. The overall minimum is always such a simple cycle.
    """
    best: list[int] | None = None
    for r in nodes:
        dist = {r: 0}
        parent = {r: -1}
        queue = deque([r])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for v in nbrs[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u] and parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is not None and length >= len(best):
                        continue
                    pu, pv = [u], [v]
                    while pu[-1] != r:
                        pu.append(parent[pu[-1]])
                    while pv[-1] != r:
                        pv.append(parent[pv[-1]])
                    if set(pu[:-1]) & set(pv):
                        continue
                    best = pu[::-1] + pv[:-1]
    return best


def _cycle_half(cycle: list[int], nv: int) -> list[tuple[int, int]]:
    """Alternate edges of a cycle: the half holding the smallest ``(i, j)`` edge."""
    length = len(cycle)
    edges = []
    for k in range(length):
        a, b = cycle[k], cycle[(k + 1) % length]
        edges.append((a, b - nv) if a < nv else (b, a - nv))
    start = min(range(length), key=lambda k: edges[k])
    return [edges[(start + 2 * t) % length] for t in range(length // 2)]


def find_alternating_half(g: BipartiteGraph) -> list[tuple[int, int]] | None:
    """Every other edge of a shortest cycle of ``g``, in traversal order.

    Returns None when ``g`` is a forest.
    """
    nv = g.v_count
    nbrs = [list(bits(a)) for a in g.v_adj]
    nbrs = [[nv + j for j in row] for row in nbrs] + [list(bits(a)) for a in g.w_adj]
    cycle = _shortest_cycle(nbrs, list(range(g.vertex_count)))
    if cycle is None:
        return None
    return _cycle_half(cycle, nv)


class _AltCycleEngine:
    def __init__(self, g: BipartiteGraph, memo: MemoTable, max_exponent: int):
        self.nv, self.nw = g.v_count, g.w_count
        self.edges = g.edges
        self.index = {e: k for k, e in enumerate(g.edges)}
        # incident edge masks per vertex
        self.v_inc = [0] * g.v_count
        self.w_inc = [0] * g.w_count
        for k, (i, j) in enumerate(g.edges):
            self.v_inc[i] |= 1 << k
            self.w_inc[j] |= 1 << k
        self.memo = memo
        self.max_exponent = max_exponent

    def _adjacency(self, em: int) -> tuple[list[int], list[int]]:
        v_adj = [0] * self.nv
        w_adj = [0] * self.nw
        for k in bits(em):
            i, j = self.edges[k]
            v_adj[i] |= 1 << j
            w_adj[j] |= 1 << i
        return v_adj, w_adj

    def value(self, vm: int, wm: int, em: int) -> IntPolynomial:
        key = (vm, wm, em)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        return self.memo.put(key, self._compute(vm, wm, em))

    def _compute(self, vm: int, wm: int, em: int) -> IntPolynomial:
        v_adj, w_adj = self._adjacency(em)
        comps = component_masks(v_adj, w_adj, vm, wm)
        if len(comps) > 1:
            parts = []
            for cv, cw in comps:
                cem = 0
                for i in bits(cv):
                    cem |= self.v_inc[i]
                parts.append(self.value(cv, cw, cem & em))
            return _product_rule(parts)
        if vm.bit_count() + wm.bit_count() == 1:
            return ONE

        for i in bits(vm):
            if v_adj[i].bit_count() == 1:
                return self.value(vm & ~(1 << i), wm, em & ~self.v_inc[i])
        for j in bits(wm):
            if w_adj[j].bit_count() == 1:
                return self.value(vm, wm & ~(1 << j), em & ~self.w_inc[j])

        nv = self.nv
        nbrs = [[nv + j for j in bits(v_adj[i])] for i in range(nv)] + [list(bits(w_adj[j])) for j in range(self.nw)]
        nodes = list(bits(vm)) + [nv + j for j in bits(wm)]
        cycle = _shortest_cycle(nbrs, nodes)
        if cycle is None:
            raise ConsistencyFailure("connected graph with minimum degree 2 has no cycle")
        half = _cycle_half(cycle, nv)
        if len(half) > self.max_exponent:
            raise ResourceLimit(f"cycle half of length {len(half)} needs more than 2^{self.max_exponent} terms")
        half_mask = 0
        for e in half:
            half_mask |= 1 << self.index[e]
        return _signed_subset_sum(half_mask, lambda t: self.value(vm, wm, em & ~t))


def interior_altcycle(
    g: BipartiteGraph,
    *,
    memo: MemoTable | None = None,
    use_memo: bool = True,
    max_exponent: int = DEFAULT_MAX_TERMS_EXPONENT,
) -> IntPolynomial:
    """Interior polynomial by alternating-cycle edge deletion.

    Memo keys are ``(V-mask, W-mask, edge-mask)`` over ``g``'s indices.
    """
    if g.vertex_count == 0:
        raise ValueError("the interior polynomial needs at least one vertex")
    if memo is None:
        memo = MemoTable(enabled=use_memo)
    engine = _AltCycleEngine(g, memo, max_exponent)
    return engine.value(g.full(Side.V).mask, g.full(Side.W).mask, (1 << g.edge_count) - 1)


# ---------------------------------------------------------------------------


def alternating_sum(
    g: BipartiteGraph,
    s: VertexSet,
    evaluate: Callable[[BipartiteGraph], IntPolynomial] = interior_via_ehrhart,
) -> IntPolynomial:
    """``sum over J ⊆ s of (-1)^|J| I_{G-J}``, each term from ``evaluate``.

    The default evaluator is the lattice-point oracle, which shares no code
    with the recursion engines.
    """
    acc = IntPolynomial()
    sub = s.mask
    while True:
        term = evaluate(delete_vertices(g, VertexSet(s.side, sub)))
        acc = acc - term if sub.bit_count() % 2 else acc + term
        if sub == 0:
            return acc
        sub = (sub - 1) & s.mask
