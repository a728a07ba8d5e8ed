"""Named graph families, addressable by short spec strings such as ``"complete 2 3"``."""

from __future__ import annotations

import random

from .errors import InvalidInput
from .graph import BipartiteGraph, build


def complete(m: int, n: int) -> BipartiteGraph:
    return build(m, n, [(i, j) for i in range(m) for j in range(n)])


def star(n: int) -> BipartiteGraph:
    return complete(1, n)


def path(k: int) -> BipartiteGraph:
    """Path on ``k`` vertices, alternating V, W, V, ..."""
    if k < 1:
        raise InvalidInput("a path needs at least one vertex")
    edges = []
    for t in range(k - 1):
        v, w = (t, t + 1) if t % 2 == 0 else (t + 1, t)
        edges.append((v // 2, w // 2))
    return build((k + 1) // 2, k // 2, edges)


def cycle(length: int) -> BipartiteGraph:
    if length < 4 or length % 2:
        raise InvalidInput("a bipartite cycle has even length at least 4")
    h = length // 2
    # vertex 2t is V_t, vertex 2t+1 is W_t
    edges = [(t, t) for t in range(h)] + [((t + 1) % h, t) for t in range(h)]
    return build(h, h, edges)


def grid2(k: int) -> BipartiteGraph:
    """The ladder P_2 x P_k, coloured by parity of row + column."""
    if k < 1:
        raise InvalidInput("grid needs at least one column")
    cells = [(c, r) for c in range(k) for r in range(2)]
    v_cells = [x for x in cells if sum(x) % 2 == 0]
    w_cells = [x for x in cells if sum(x) % 2 == 1]
    vi = {x: n for n, x in enumerate(v_cells)}
    wi = {x: n for n, x in enumerate(w_cells)}
    edges = []
    for c, r in v_cells:
        for nb in ((c - 1, r), (c + 1, r), (c, 1 - r)):
            if nb in wi:
                edges.append((vi[(c, r)], wi[nb]))
    return build(len(v_cells), len(w_cells), edges)


def random_graph(nv: int, nw: int, p: float, seed: int | None = None) -> BipartiteGraph:
    """Each of the ``nv * nw`` pairs is an edge independently with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise InvalidInput("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    return build(nv, nw, [(i, j) for i in range(nv) for j in range(nw) if rng.random() < p])


def from_spec(spec: str, seed: int | None = None) -> BipartiteGraph:
    """Build a graph from ``"<family> <args...>"``.

    Families: ``complete m n``, ``grid2 k``, ``path k``, ``cycle 2k``,
    ``star n``, ``random nV nW p [seed]``. ``seed`` is used by ``random`` when
    the spec does not carry its own.
    """
    parts = spec.split()
    if not parts:
        raise InvalidInput("empty generator spec")
    name, args = parts[0].lower(), parts[1:]
    try:
        if name == "complete" and len(args) == 2:
            return complete(int(args[0]), int(args[1]))
        if name == "grid2" and len(args) == 1:
            return grid2(int(args[0]))
        if name == "path" and len(args) == 1:
            return path(int(args[0]))
        if name == "cycle" and len(args) == 1:
            return cycle(int(args[0]))
        if name == "star" and len(args) == 1:
            return star(int(args[0]))
        if name == "random" and len(args) in (3, 4):
            s = int(args[3]) if len(args) == 4 else seed
            return random_graph(int(args[0]), int(args[1]), float(args[2]), s)
    except ValueError as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise InvalidInput(f"bad arguments in generator spec {spec!r}: {exc}") from None
    raise InvalidInput(f"unknown generator spec {spec!r}")


def complete_sizes(spec: str) -> tuple[int, int] | None:
    """``(m, n)`` if the spec names a complete bipartite graph (``complete`` or ``star``)."""
    parts = spec.split()
    if len(parts) == 3 and parts[0].lower() == "complete":
        return int(parts[1]), int(parts[2])
    if len(parts) == 2 and parts[0].lower() == "star":
        return 1, int(parts[1])
    return None
