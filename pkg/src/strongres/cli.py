"""Command-line interface: ``strongres gen | analyze | verify | sweep``."""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .boundary import boundary, strong_resolving_graph
from .errors import DomainError, GraphError, NotConnectedError, ParseError, SearchBudgetExceeded
from .families import SPEC_GRAMMAR, generate, parse_spec
from .graph import all_pairs_distances, diameter, graph_from_edge_list, graph_to_edge_list
from .kernels import clique_number, vertex_cover_number
from .solvers import DEFAULT_BUDGET, pds_bounds, strong_metric_dimension, strong_partition_dimension
from .verify import SUITES

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 2
EXIT_DISCONNECTED = 3
EXIT_PARSE = 4


_INT = {"type": "integer"}
_BOUND_LIST = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["value", "source"],
        "properties": {"value": _INT, "source": {"type": "string"}},
    },
}

# JSON Schema (draft 2020-12) for ``analyze --json`` output.
ANALYSIS_JSON_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "input", "n", "m"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "input": {"type": "string"},
        "n": _INT,
        "m": _INT,
        "diameter": _INT,
        "boundary_size": _INT,
        "srg": {
            "type": "object",
            "required": ["order", "size", "clique_number", "vertex_cover_number", "back_map", "edges"],
            "properties": {
                "order": _INT,
                "size": _INT,
                "clique_number": _INT,
                "vertex_cover_number": _INT,
                "back_map": {"type": "array", "items": _INT},
                "edges": {"type": "array", "items": {"type": "array", "items": _INT,
                                                     "minItems": 2, "maxItems": 2}},
            },
        },
        "dims": {
            "type": "object",
            "required": ["value", "basis", "method"],
            "properties": {"value": _INT, "basis": {"type": "array", "items": _INT},
                           "method": {"type": "string"}},
        },
        "pds": {
            "oneOf": [
                {"type": "object", "required": ["status", "value", "partition", "method"],
                 "properties": {"status": {"const": "ok"}, "value": _INT,
                                "partition": {"type": "array",
                                              "items": {"type": "array", "items": _INT}},
                                "method": {"type": "string"}}},
                {"type": "object", "required": ["status", "lower", "upper"],
                 "properties": {"status": {"const": "budget_exceeded"},
                                "lower": _INT, "upper": _INT}},
            ],
        },
        "bounds": {
            "type": "object",
            "required": ["lower", "upper", "best_lower", "best_upper"],
            "properties": {"lower": _BOUND_LIST, "upper": _BOUND_LIST,
                           "best_lower": _INT, "best_upper": _INT},
        },
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
}


@dataclass
class AnalysisRecord:
    input: str
    n: int
    m: int
    diameter: int | None = None
    boundary_size: int | None = None
    srg: dict | None = None
    dims: dict | None = None
    pds: dict | None = None
    bounds: dict | None = None
    timings: dict | None = field(default=None)
    schema: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisRecord":
        return cls(**json.loads(text))


def default_budget() -> int:
    env = os.environ.get("STRONGRES_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def load_graph(source: str):
    """Edge-list file if ``source`` names an existing file, otherwise a family spec."""
    path = Path(source)
    if path.is_file():
        return graph_from_edge_list(path.read_text())
    return generate(parse_spec(source))


# ---------------------------------------------------------------------------
# analyze


def analyze(source: str, want: set[str], budget: int, timings: bool = True) -> tuple[AnalysisRecord, int]:
    """Run the requested analyses; ``budget`` caps the partition search only."""
    g = load_graph(source)
    d = all_pairs_distances(g)
    rec = AnalysisRecord(input=source, n=g.n, m=g.m, diameter=diameter(g, d),
                         boundary_size=len(boundary(g, d)) if g.n >= 2 else 0)
    clock: dict[str, float] = {}
    status = EXIT_OK

    if "srg" in want:
        t0 = time.perf_counter()
        sr = strong_resolving_graph(g, d)
        rec.srg = {
            "order": sr.graph.n,
            "size": sr.graph.m,
            "clique_number": clique_number(sr.graph).value,
            "vertex_cover_number": vertex_cover_number(sr.graph).value,
            "back_map": list(sr.back_map),
            "edges": [[sr.back_map[a], sr.back_map[b]] for a, b in sr.graph.edges()],
        }
        clock["srg"] = time.perf_counter() - t0
    if "dims" in want:
        t0 = time.perf_counter()
        res = strong_metric_dimension(g, d)
        rec.dims = {"value": res.value, "basis": list(res.certificate), "method": res.method}
        clock["dims"] = time.perf_counter() - t0
    if "bounds" in want or "pds" in want:
        t0 = time.perf_counter()
        bounds = pds_bounds(g, d)
        if "bounds" in want:
            rec.bounds = bounds.to_dict()
        clock["bounds"] = time.perf_counter() - t0
    if "pds" in want:
        t0 = time.perf_counter()
        try:
            res = strong_partition_dimension(g, d, budget=budget, bounds=bounds)
            rec.pds = {"status": "ok", "value": res.value,
                       "partition": res.certificate.to_lists(), "method": res.method}
        except SearchBudgetExceeded as exc:
            rec.pds = {"status": "budget_exceeded", "lower": exc.bounds.best_lower,
                       "upper": exc.bounds.best_upper}
            if rec.bounds is None:
                rec.bounds = exc.bounds.to_dict()
            status = EXIT_BUDGET
        clock["pds"] = time.perf_counter() - t0
    if timings:
        rec.timings = {k: round(v, 6) for k, v in clock.items()}
    return rec, status


def format_record(rec: AnalysisRecord) -> str:
    rows = [("input", rec.input), ("n", rec.n), ("m", rec.m),
            ("diameter", rec.diameter), ("boundary size", rec.boundary_size)]
    if rec.srg:
        s = rec.srg
        rows += [("G_SR order", s["order"]), ("G_SR size", s["size"]),
                 ("omega(G_SR)", s["clique_number"]), ("alpha(G_SR)", s["vertex_cover_number"])]
    if rec.dims:
        rows += [("dim_s", rec.dims["value"]), ("strong metric basis", rec.dims["basis"])]
    if rec.pds:
        if rec.pds["status"] == "ok":
            rows += [("pd_s", rec.pds["value"]), ("strong partition basis", rec.pds["partition"]),
                     ("pd_s method", rec.pds["method"])]
        else:
            rows += [("pd_s", f"budget exceeded; {rec.pds['lower']} <= pd_s <= {rec.pds['upper']}")]
    if rec.bounds:
        for kind in ("lower", "upper"):
            text = ", ".join(f"{b['value']} ({b['source']})" for b in rec.bounds[kind])
            rows.append((f"pd_s {kind} bounds", text))
    if rec.timings:
        rows += [(f"time {k}", f"{v:.4f}s") for k, v in rec.timings.items()]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}} : {v}" for k, v in rows)


# ---------------------------------------------------------------------------
# sweep


def parse_range(text: str) -> tuple[str, list[int]]:
    key, eq, value = text.partition("=")
    if not eq:
        raise GraphError(f"expected KEY=A..B or KEY=V, got {text!r}")
    try:
        if ".." in value:
            lo, hi = value.split("..")
            return key, list(range(int(lo), int(hi) + 1))
        return key, [int(value)]
    except ValueError:
        raise GraphError(f"bad range {text!r}") from None


def sweep_rows(family: str, ranges: list[str], budget: int, open_question: bool = False):
    parsed = [parse_range(r) for r in ranges]
    keys = [k for k, _ in parsed]
    header = keys + ["order", "dim_s", "pd_s", "pd_lower", "pd_upper", "status"]
    if open_question:
        header += ["oq_rhs", "oq_holds"]
    yield header
    for values in itertools.product(*(v for _, v in parsed)):
        spec = parse_spec(f"{family}:" + ",".join(f"{k}={v}" for k, v in zip(keys, values)))
        g = generate(spec)
        d = all_pairs_distances(g)
        dims = strong_metric_dimension(g, d).value
        bounds = pds_bounds(g, d)
        try:
            pd = strong_partition_dimension(g, d, budget=budget, bounds=bounds).value
            status = "ok"
        except SearchBudgetExceeded:
            pd, status = "", "budget_exceeded"
        row = list(values) + [g.n, dims, pd, bounds.best_lower, bounds.best_upper, status]
        if open_question:
            if pd == "":
                row += ["", ""]
            else:
                rhs = (pd + g.n - 2) / 2
                row += [f"{rhs:g}", int(dims <= rhs)]
        yield row


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongres",
        description="Strong metric dimension and strong partition dimension of graphs.",
        epilog=SPEC_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family graph as an edge list",
                       epilog=SPEC_GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("spec")
    p.add_argument("-o", "--output", help="output path (default: stdout)")

    p = sub.add_parser("analyze", help="analyze an edge-list file or family spec",
                       epilog=SPEC_GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("input")
    for flag in ("srg", "dims", "pds", "bounds"):
        p.add_argument(f"--{flag}", action="store_true")
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--no-timings", action="store_true")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-n", type=int, default=None, help="oracle / characterizations corpus size")
    p.add_argument("--samples", type=int, default=None, help="random corpus size (bounds, unicyclic)")
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("sweep", help="tabulate a family over parameter ranges as CSV")
    p.add_argument("family")
    p.add_argument("ranges", nargs="+", metavar="KEY=A..B")
    p.add_argument("--explore-open-question", action="store_true",
                   help="add columns comparing dim_s with (pd_s + n - 2) / 2")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("-o", "--output")
    return parser


def _run_suite(name: str, args) -> "SuiteReport":  # noqa: F821
    from . import verify

    kwargs = {}
    if name in ("oracle", "characterizations") and args.max_n is not None:
        kwargs["max_n"] = args.max_n
    if name in ("bounds", "unicyclic", "heuristics") and args.samples is not None:
        kwargs["samples"] = args.samples
    if args.seed is not None and name not in ("oracle", "characterizations"):
        kwargs["seed"] = args.seed
    if name == "formulas":
        report = verify.verify_closed_formulas(**kwargs)
        return report.merge(verify.verify_c1_family()).merge(verify.verify_realizability())
    fn = {
        "oracle": verify.verify_oracle,
        "characterizations": verify.verify_characterizations,
        "bounds": verify.verify_bounds,
        "srg-shapes": verify.verify_srg_shapes,
        "unicyclic": verify.verify_unicyclic,
        "heuristics": verify.verify_heuristics,
    }[name]
    return fn(**kwargs)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            text = graph_to_edge_list(generate(parse_spec(args.spec)))
            if args.output:
                Path(args.output).write_text(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK

        if args.command == "analyze":
            want = {f for f in ("srg", "dims", "pds", "bounds") if getattr(args, f)}
            if not want:
                want = {"srg", "dims", "pds", "bounds"}
            budget = args.budget if args.budget is not None else default_budget()
            rec, status = analyze(args.input, want, budget, timings=not args.no_timings)
            print(rec.to_json() if args.json else format_record(rec))
            return status

        if args.command == "verify":
            names = sorted(SUITES) if args.suite == "all" else [args.suite]
            ok = True
            for name in names:
                report = _run_suite(name, args)
                print("\n".join(report.lines()))
                ok = ok and report.ok
            return EXIT_OK if ok else EXIT_ERROR

        if args.command == "sweep":
            budget = args.budget if args.budget is not None else default_budget()
            out = open(args.output, "w", newline="") if args.output else sys.stdout
            try:
                writer = csv.writer(out, lineterminator="\n")
                for row in sweep_rows(args.family, args.ranges, budget, args.explore_open_question):
                    writer.writerow(row)
            finally:
                if args.output:
                    out.close()
            return EXIT_OK
    except NotConnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (GraphError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
