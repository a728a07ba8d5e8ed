"""Plain-text graph files.

::

    c optional comment lines
    p bip <nV> <nW> <nE>
    e <i> <j>        (exactly nE lines, 1-based, 1 <= i <= nV, 1 <= j <= nW)

Blank lines and lines starting with ``c`` are ignored anywhere.
"""

from __future__ import annotations

import os

from .errors import InvalidEdge, ParallelEdge, ParseError
from .graph import BipartiteGraph, build


def parse_graph_text(text: str) -> BipartiteGraph:
    header: tuple[int, int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise ParseError("second header line", lineno)
            if len(fields) != 5 or fields[1] != "bip":
                raise ParseError("expected 'p bip <nV> <nW> <nE>'", lineno)
            try:
                nv, nw, ne = (int(f) for f in fields[2:])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if min(nv, nw, ne) < 0:
                raise ParseError("header counts must be non-negative", lineno)
            header = (nv, nw, ne)
        elif fields[0] == "e":
            if header is None:
                raise ParseError("edge line before header", lineno)
            if len(fields) != 3:
                raise ParseError("expected 'e <i> <j>'", lineno)
            try:
                i, j = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            nv, nw, _ = header
            if not (1 <= i <= nv and 1 <= j <= nw):
                raise InvalidEdge(f"line {lineno}: edge ({i}, {j}) outside 1..{nv} x 1..{nw}")
            if (i, j) in seen:
                raise ParallelEdge(f"line {lineno}: edge ({i}, {j}) repeated")
            seen.add((i, j))
            edges.append((i - 1, j - 1))
        else:
            raise ParseError(f"unrecognised line type {fields[0]!r}", lineno)
    if header is None:
        raise ParseError("missing 'p bip' header")
    if len(edges) != header[2]:
        raise ParseError(f"header declares {header[2]} edges, found {len(edges)}")
    return build(header[0], header[1], edges)


def parse_graph_file(path: str | os.PathLike) -> BipartiteGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def format_graph(g: BipartiteGraph) -> str:
    lines = [f"p bip {g.v_count} {g.w_count} {g.edge_count}"]
    lines += [f"e {i + 1} {j + 1}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def write_graph_file(g: BipartiteGraph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))
