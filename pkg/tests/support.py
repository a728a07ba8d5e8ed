"""Independent oracles and graph catalogues shared by the test modules."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from interiorpoly.ehrhart import interior_via_ehrhart
from interiorpoly.graph import BipartiteGraph, Side, VertexSet, build, components, neighborhood


def complete(m, n):
    return build(m, n, [(i, j) for i in range(m) for j in range(n)])


def random_graph(rng: random.Random, max_vertices: int, min_vertices: int = 1, p: float | None = None):
    total = rng.randint(min_vertices, max_vertices)
    nv = rng.randint(0, total)
    nw = total - nv
    if p is None:
        p = rng.uniform(0.2, 0.9)
    return build(nv, nw, [(i, j) for i in range(nv) for j in range(nw) if rng.random() < p])


def random_connected(rng: random.Random, max_vertices: int, min_vertices: int = 2):
    while True:
        g = random_graph(rng, max_vertices, min_vertices)
        if g.v_count and g.w_count and g.is_connected():
            return g


def random_tree(rng: random.Random, n: int) -> BipartiteGraph:
    """Random labelled tree on ``n`` vertices, 2-coloured by BFS depth parity."""
    parent = [None] + [rng.randrange(k) for k in range(1, n)]
    depth = [0] * n
    for k in range(1, n):
        depth[k] = depth[parent[k]] + 1
    v_ids = [k for k in range(n) if depth[k] % 2 == 0]
    w_ids = [k for k in range(n) if depth[k] % 2 == 1]
    vi = {k: t for t, k in enumerate(v_ids)}
    wi = {k: t for t, k in enumerate(w_ids)}
    edges = []
    for k in range(1, n):
        a, b = k, parent[k]
        if a in vi:
            edges.append((vi[a], wi[b]))
        else:
            edges.append((vi[b], wi[a]))
    return build(len(v_ids), len(w_ids), edges)


@lru_cache(maxsize=None)
def ehrhart_cached(key) -> tuple:
    nv, nw, edges = key
    return interior_via_ehrhart(BipartiteGraph(nv, nw, edges)).coeffs


def oracle(g: BipartiteGraph):
    from interiorpoly.polynomial import IntPolynomial

    return IntPolynomial(ehrhart_cached(g.key()))


def brute_max_matching(g: BipartiteGraph) -> int:
    """Largest set of pairwise disjoint edges, by trying edge subsets largest first."""
    edges = g.edges
    for size in range(min(g.v_count, g.w_count), 0, -1):
        for combo in itertools.combinations(edges, size):
            if len({i for i, _ in combo}) == size and len({j for _, j in combo}) == size:
                return size
    return 0


def brute_violator_exists(g: BipartiteGraph, s: VertexSet) -> bool:
    members = list(s)
    for r in range(1, len(members) + 1):
        for sub in itertools.combinations(members, r):
            x = VertexSet.of(s.side, sub)
            if len(x) > len(neighborhood(g, x)):
                return True
    return False


def _canonical_rows(rows, nw, perm_tables):
    best = None
    for table in perm_tables:
        cand = tuple(sorted(table[r] for r in rows))
        if best is None or cand < best:
            best = cand
    return best


def catalog(max_vertices: int, connected: bool = True, include_empty_side: bool = False):
    """One bipartite graph per isomorphism class (colour classes fixed, nV <= nW).

    Rows are W-neighbourhood masks of the V vertices; taking rows as a sorted
    multiset removes V permutations and minimising over W permutations
    removes the rest.
    """
    out = []
    for total in range(1, max_vertices + 1):
        for nv in range(0 if include_empty_side else 1, total // 2 + 1):
            nw = total - nv
            if nv == 0 and not include_empty_side:
                continue
            perm_tables = []
            for perm in itertools.permutations(range(nw)):
                table = []
                for m in range(1 << nw):
                    t = 0
                    for b in range(nw):
                        if m >> b & 1:
                            t |= 1 << perm[b]
                    table.append(t)
                perm_tables.append(table)
            seen = set()
            for rows in itertools.combinations_with_replacement(range(1 << nw), nv):
                canon = _canonical_rows(rows, nw, perm_tables)
                if canon in seen:
                    continue
                seen.add(canon)
                edges = [(i, j) for i, r in enumerate(canon) for j in range(nw) if r >> j & 1]
                g = build(nv, nw, edges)
                if connected and len(components(g)) != 1:
                    continue
                out.append(g)
    if connected:
        out.insert(0, build(1, 0, []))
    return out
