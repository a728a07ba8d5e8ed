"""Command-line front end.

Exit codes: 0 success, 1 methods disagree in verify mode, 2 bad usage,
3 unreadable or malformed input, 4 computation error (resource cap etc.).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Mapping

from . import __version__
from .closed_form import interior_complete
from .ehrhart import DEFAULT_MAX_POINTS, ehrhart_values, interior_via_ehrhart
from .errors import (
    InteriorError,
    InvalidEdge,
    InvalidInput,
    MethodMismatch,
    ParallelEdge,
    ParseError,
    ResourceLimit,
)
from .generators import complete_sizes, from_spec
from .graph import BipartiteGraph
from .graphfile import parse_graph_file, write_graph_file
from .polynomial import IntPolynomial
from .recursion import interior_altcycle, interior_nonexpanding

METHODS = ("ehrhart", "nonexpanding", "altcycle", "closed-form", "auto", "verify")
AUTO_RECURSION_LIMIT = 20

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_COMPUTE = 4

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["graph", "method", "coefficients", "polynomial", "timings_ms"],
    "properties": {
        "graph": {
            "type": "object",
            "required": ["nV", "nW", "edges"],
            "properties": {
                "nV": {"type": "integer", "minimum": 0},
                "nW": {"type": "integer", "minimum": 0},
                "edges": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "items": {"type": "integer", "minimum": 1},
                        "minItems": 2,
                        "maxItems": 2,
                    },
                },
            },
        },
        "method": {"enum": list(METHODS)},
        "coefficients": {"type": "array", "items": {"type": "integer"}},
        "polynomial": {"type": "string"},
        "ehrhart_values": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "agreement": {"type": "boolean"},
        "results": {
            "type": "object",
            "additionalProperties": {"type": "array", "items": {"type": "integer"}},
        },
        "timings_ms": {"type": "object", "additionalProperties": {"type": "number", "minimum": 0}},
    },
    "additionalProperties": False,
}


@dataclass
class RunConfig:
    input_path: str | None = None
    gen_spec: str | None = None
    method: str = "auto"
    output: str = "text"
    ehrhart_upto: int | None = None
    max_points: int = DEFAULT_MAX_POINTS
    threads: int = 1
    seed: int | None = None
    # Method overrides, keyed by method name; used to inject faults in tests.
    overrides: Mapping[str, Callable[[BipartiteGraph], IntPolynomial]] = field(default_factory=dict)

    def __post_init__(self):
        if (self.input_path is None) == (self.gen_spec is None):
            raise InvalidInput("give exactly one of an input file or a generator spec")
        if self.method not in METHODS:
            raise InvalidInput(f"unknown method {self.method!r}")
        if self.method == "closed-form" and self.complete_sizes() is None:
            raise InvalidInput("closed-form needs a complete bipartite generator spec ('complete m n' or 'star n')")

    def complete_sizes(self) -> tuple[int, int] | None:
        return complete_sizes(self.gen_spec) if self.gen_spec else None


def load_graph(config: RunConfig) -> BipartiteGraph:
    if config.input_path is not None:
        return parse_graph_file(config.input_path)
    return from_spec(config.gen_spec, seed=config.seed)


def _method_table(config: RunConfig) -> dict[str, Callable[[BipartiteGraph], IntPolynomial]]:
    table: dict[str, Callable[[BipartiteGraph], IntPolynomial]] = {
        "ehrhart": lambda g: interior_via_ehrhart(g, config.max_points, config.threads),
        "nonexpanding": interior_nonexpanding,
        "altcycle": interior_altcycle,
    }
    sizes = config.complete_sizes()
    if sizes is not None:
        table["closed-form"] = lambda g: interior_complete(*sizes)
    table.update(config.overrides)
    return table


def _auto_choice(config: RunConfig, g: BipartiteGraph) -> str:
    if config.complete_sizes() is not None:
        return "closed-form"
    if g.vertex_count <= AUTO_RECURSION_LIMIT:
        return "nonexpanding"
    return "ehrhart"


def run(config: RunConfig) -> dict:
    """Compute the requested polynomial(s) and return the report dictionary.

    Raises:
        MethodMismatch: verify mode found disagreeing methods. The full
            report is attached as ``exc.report``.
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    g = load_graph(config)
    timings["load"] = (time.perf_counter() - t0) * 1000
    table = _method_table(config)

    report: dict = {
        "graph": {"nV": g.v_count, "nW": g.w_count, "edges": [[i + 1, j + 1] for i, j in g.edges]},
        "method": config.method,
    }
    if config.method == "verify":
        names = list(table)
    elif config.method == "auto":
        names = [_auto_choice(config, g)]
    else:
        names = [config.method]

    results: dict[str, IntPolynomial] = {}
    for name in names:
        t0 = time.perf_counter()
        try:
            results[name] = table[name](g)
        except ResourceLimit:
            if config.method != "auto" or name != "ehrhart":
                raise
            # too many lattice points; the recursion has no point cap
            timings[name] = (time.perf_counter() - t0) * 1000
            name = "nonexpanding"
            t0 = time.perf_counter()
            results[name] = table[name](g)
        timings[name] = (time.perf_counter() - t0) * 1000

    first = next(iter(results.values()))
    report["coefficients"] = list(first.coeffs)
    report["polynomial"] = str(first)
    if config.ehrhart_upto is not None:
        t0 = time.perf_counter()
        report["ehrhart_values"] = ehrhart_values(g, config.ehrhart_upto, config.max_points, config.threads)
        timings["ehrhart_values"] = (time.perf_counter() - t0) * 1000
    if config.method == "verify":
        report["results"] = {name: list(p.coeffs) for name, p in results.items()}
        report["agreement"] = all(p == first for p in results.values())
    report["timings_ms"] = timings

    if report.get("agreement") is False:
        exc = MethodMismatch(
            "methods disagree: " + "; ".join(f"{name}: {p}" for name, p in results.items())
        )
        exc.report = report
        raise exc
    return report


def render_text(report: dict) -> str:
    gr = report["graph"]
    lines = [f"graph: |V|={gr['nV']} |W|={gr['nW']} |E|={len(gr['edges'])}", f"method: {report['method']}"]
    if "results" in report:
        for name, coeffs in report["results"].items():
            lines.append(f"  {name}: {IntPolynomial(coeffs)}")
        lines.append(f"agreement: {'yes' if report['agreement'] else 'NO'}")
    lines.append(f"I(x) = {report['polynomial']}")
    lines.append("coefficients: " + " ".join(str(c) for c in report["coefficients"]))
    if "ehrhart_values" in report:
        lines.append("ehrhart values: " + " ".join(str(v) for v in report["ehrhart_values"]))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="interiorpoly",
        description="Interior polynomial of a bipartite graph, by lattice points or recursion.",
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="graph file ('p bip nV nW nE' header, 'e i j' lines)")
    src.add_argument(
        "--gen",
        metavar="SPEC",
        help="generator: 'complete m n', 'grid2 k', 'path k', 'cycle 2k', 'star n', 'random nV nW p [seed]'",
    )
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--verify", action="store_true", help="same as --method verify")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--ehrhart-upto", type=int, metavar="S", help="also report lattice counts for dilations 0..S")
    p.add_argument("--threads", type=int, default=1, metavar="N", help="worker threads for lattice enumeration")
    p.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS, metavar="N", help="cap on points per dilation")
    p.add_argument("--seed", type=int, help="seed for the random generator")
    p.add_argument("--write-graph", metavar="PATH", help="also write the input graph in file format")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            input_path=args.input,
            gen_spec=args.gen,
            method="verify" if args.verify else args.method,
            output="json" if args.json else "text",
            ehrhart_upto=args.ehrhart_upto,
            max_points=args.max_points,
            threads=max(1, args.threads),
            seed=args.seed,
        )
        if args.write_graph:
            write_graph_file(load_graph(config), args.write_graph)
        report = run(config)
        code = EXIT_OK
    except MethodMismatch as exc:
        report = exc.report
        code = EXIT_MISMATCH
        print(f"error: {exc}", file=sys.stderr)
    except (OSError, ParseError, InvalidEdge, ParallelEdge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InteriorError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE

    if config.output == "json":
        print(json.dumps(report))
    else:
        print(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
