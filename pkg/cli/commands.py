"""Subcommand handlers and the process entry point."""
from __future__ import annotations

import argparse
import json
import os
import sqlite3
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from config import Defaults, Limits, load_defaults
from constructions.line_scheme import LineColoringScheme, eval_line_color, verify_line_scheme
from constructions.parity import check_odd_parity_solution, distance_kind, enumerate_odd_parity_solutions
from constructions.product import product_coloring
from data_logger import log_event, set_log_path
from errors import BudgetExhausted, CertificateError, InputError
from extremal.fixtures import fixture
from extremal.kdistance import max_k_distance_set
from extremal.ledger import bound_report
from graphs.classes import DistanceClassMatrix, classify
from graphs.codec import Space, load_space, save_space
from graphs.dimacs import read_dimacs, write_dimacs
from graphs.graph import DistanceGraph, build_graph, max_degree
from numerics.codec import load_pointset
from numerics.points import PointSet, generate_grid, scale_pointset
from numerics.rational import format_rational, format_rational_list, parse_rational, parse_rational_list
from orchestrator.models import RunReport
from orchestrator.storage import SQLiteStorage
from orchestrator.suite import ClaimSuite, suite_exit_code
from solver.bipartite import bipartition
from solver.bruteforce import chromatic_bruteforce
from solver.coloring import Coloring
from solver.dsatur import chromatic_exact
from solver.greedy import degeneracy, degeneracy_order, greedy_coloring
from utils.digest import file_digest

from .parser import build_parser

Result = Tuple[Dict[str, Any], int]


@dataclass
class CommandContext:
    seed: int
    threads: int
    budget: Optional[int]
    defaults: Defaults
    limits: Limits
    inputs: Dict[str, str] = field(default_factory=dict)

    def record_file(self, label: str, path: str) -> None:
        self.inputs[label] = file_digest(path)


# ----------------------------------------------------------------------
# Shared helpers


def _parse_ids(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"class IDs must be integers: {text!r}") from exc


def _load_space(args: argparse.Namespace, ctx: CommandContext) -> Tuple[Space, str]:
    if getattr(args, "fixture", None):
        ctx.inputs["fixture"] = args.fixture
        return fixture(args.fixture, ctx.limits), args.fixture
    ctx.record_file("input", args.input)
    return load_space(args.input), os.path.basename(args.input)


def _as_matrix(space: Space, ctx: CommandContext) -> DistanceClassMatrix:
    if isinstance(space, PointSet):
        return classify(space, ctx.limits)
    return space


def _graph_summary(g: DistanceGraph) -> Dict[str, Any]:
    return {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "forbidden_classes": sorted(g.forbidden_classes),
        "realized": format_rational_list(g.forbidden_distances),
        "unrealized": format_rational_list(g.unrealized),
        "max_degree": max_degree(g),
    }


def _forbidden_graph(matrix: DistanceClassMatrix, distances: Optional[str], classes: Optional[str]) -> DistanceGraph:
    if distances is not None:
        return build_graph(matrix, distances=parse_rational_list(distances))
    return build_graph(matrix, classes=_parse_ids(classes or ""))


def _best_coloring(g: DistanceGraph, ctx: CommandContext) -> Tuple[Coloring, str]:
    split = bipartition(g)
    if split.is_bipartite:
        return split.to_coloring(), "bipartition"
    return chromatic_exact(g, budget=ctx.budget, limits=ctx.limits).coloring, "exact"


# ----------------------------------------------------------------------
# Subcommands


def cmd_gen(args: argparse.Namespace, ctx: CommandContext) -> Result:
    if args.fixture:
        space: Space = fixture(args.fixture, ctx.limits)
        ctx.inputs["fixture"] = args.fixture
    else:
        if args.side is None:
            raise InputError("--side is required with --dim")
        space = generate_grid(args.dim, args.side, args.den, ctx.limits)
    if args.scale is not None:
        if not isinstance(space, PointSet):
            raise InputError("--scale needs a coordinate point set")
        space = scale_pointset(space, parse_rational(args.scale))
    save_space(space, args.out)
    if isinstance(space, PointSet):
        return {"kind": "points", "points": len(space), "dimension": space.dimension, "out": args.out}, 0
    return {"kind": "matrix", "points": space.size, "classes": space.class_count, "out": args.out}, 0


def cmd_classify(args: argparse.Namespace, ctx: CommandContext) -> Result:
    space, _ = _load_space(args, ctx)
    matrix = _as_matrix(space, ctx)
    if args.out:
        save_space(matrix, args.out)
    freq = matrix.class_frequencies()
    classes = []
    for cid in matrix.class_ids():
        d = matrix.squared_distance_of(cid)
        classes.append({
            "id": cid,
            "squared_distance": format_rational(d) if d is not None else None,
            "pairs": freq.get(cid, 0),
        })
    return {"points": matrix.size, "class_count": matrix.class_count, "classes": classes}, 0


def cmd_graph(args: argparse.Namespace, ctx: CommandContext) -> Result:
    space, _ = _load_space(args, ctx)
    g = _forbidden_graph(_as_matrix(space, ctx), args.forbid, args.classes)
    write_dimacs(g, args.out)
    return {**_graph_summary(g), "out": args.out}, 0


def cmd_chroma(args: argparse.Namespace, ctx: CommandContext) -> Result:
    ctx.record_file("graph", args.graph)
    g = read_dimacs(args.graph)
    coloring: Optional[Coloring] = None
    if args.mode == "exact":
        result = chromatic_exact(g, budget=ctx.budget, limits=ctx.limits)
        payload = {"mode": "exact", **result.to_json()}
        coloring = result.coloring
    elif args.mode == "greedy":
        order = degeneracy_order(g) if args.order == "smallest-last" else None
        coloring = greedy_coloring(g, order)
        payload = {
            "mode": "greedy",
            "order": args.order,
            "colors": coloring.color_count,
            "coloring": list(coloring.assignment),
            "degeneracy": degeneracy(g),
        }
    elif args.mode == "bipartite":
        split = bipartition(g)
        payload = {"mode": "bipartite", **split.to_json()}
        if split.is_bipartite:
            coloring = split.to_coloring()
    else:
        payload = {"mode": "brute", "chi": chromatic_bruteforce(g)}
    payload["forbidden"] = format_rational_list(g.forbidden_distances)
    if args.svg:
        if coloring is None or not args.points:
            raise InputError("--svg needs --points and a coloring")
        from utils.svg import save_coloring_svg

        save_coloring_svg(load_pointset(args.points), coloring, args.svg)
    return payload, 0


def cmd_linecolor(args: argparse.Namespace, ctx: CommandContext) -> Result:
    scheme = LineColoringScheme.build(parse_rational(args.s1), parse_rational(args.s2))
    if args.query is not None:
        x = parse_rational(args.query)
        color = eval_line_color(scheme, x)
        return {"scheme": scheme.to_json(), "x": format_rational(x), "color": color.label, "index": int(color)}, 0
    samples = args.samples if args.samples is not None else ctx.defaults.line_samples
    bound = parse_rational(args.range_) if args.range_ is not None else ctx.defaults.line_range
    report = verify_line_scheme(
        scheme,
        samples,
        bound,
        seed=ctx.seed,
        max_denominator=ctx.defaults.line_max_denominator,
        limits=ctx.limits,
    )
    return {"scheme": scheme.to_json(), **report.to_json()}, 0


def cmd_product(args: argparse.Namespace, ctx: CommandContext) -> Result:
    space, _ = _load_space(args, ctx)
    matrix = _as_matrix(space, ctx)
    g1 = _forbidden_graph(matrix, args.forbid1, args.classes1)
    g2 = _forbidden_graph(matrix, args.forbid2, args.classes2)
    c1, how1 = _best_coloring(g1, ctx)
    c2, how2 = _best_coloring(g2, ctx)
    combined = product_coloring(c1, c2)
    union = g1.union(g2)
    if not combined.is_valid(union):
        raise CertificateError("product coloring is not proper on the union graph")
    return {
        "factors": [
            {"colors": c1.color_count, "method": how1, **_graph_summary(g1)},
            {"colors": c2.color_count, "method": how2, **_graph_summary(g2)},
        ],
        "color_count": combined.color_count,
        "coloring": list(combined.assignment),
        "union": _graph_summary(union),
    }, 0


def cmd_kdist(args: argparse.Namespace, ctx: CommandContext) -> Result:
    space, _ = _load_space(args, ctx)
    result = max_k_distance_set(_as_matrix(space, ctx), args.k, budget=ctx.budget, limits=ctx.limits)
    return result.to_json(), 0 if result.optimal else 2


def cmd_parity(args: argparse.Namespace, ctx: CommandContext) -> Result:
    payload: Dict[str, Any] = {}
    if args.distance is not None:
        payload["distance"] = distance_kind(parse_rational(args.distance)).to_json()
    if args.check is not None or args.c_max is not None:
        if args.p is None or args.q is None:
            raise InputError("--p and --q are required")
    if args.check is not None:
        parts = _parse_ids(args.check)
        if len(parts) != 3:
            raise InputError("--check takes a,b,c")
        payload["check"] = check_odd_parity_solution(parts[0], parts[1], parts[2], args.p, args.q).to_json()
    if args.c_max is not None:
        found = enumerate_odd_parity_solutions(args.p, args.q, args.c_max)
        payload["solutions"] = [list(s) for s in found]
    if not payload:
        raise InputError("nothing to do: give --distance, --check or --c-max")
    return payload, 0


def cmd_report(args: argparse.Namespace, ctx: CommandContext) -> Result:
    space, name = _load_space(args, ctx)
    ledger = bound_report(
        space,
        args.k,
        classes=_parse_ids(args.classes) if args.classes else None,
        distances=parse_rational_list(args.forbid) if args.forbid else None,
        budget=ctx.budget,
        seed=ctx.seed,
        threads=ctx.threads,
        limits=ctx.limits,
        defaults=ctx.defaults,
        space_name=name,
    )
    payload = ledger.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return payload, 0


def cmd_verify_paper(args: argparse.Namespace, ctx: CommandContext, storage: Optional[SQLiteStorage] = None) -> Result:
    only: Optional[List[str]] = None
    if args.only:
        only = [name.strip() for chunk in args.only for name in chunk.split(",") if name.strip()]
    suite = ClaimSuite(
        storage=storage,
        budget=ctx.budget,
        seed=ctx.seed,
        threads=ctx.threads,
        defaults=ctx.defaults,
        limits=ctx.limits,
    )
    results = suite.run(only)
    code = suite_exit_code(results)
    return {"claims": [r.to_json() for r in results], "all_passed": code == 0}, code


COMMANDS: Dict[str, Callable[..., Result]] = {
    "gen": cmd_gen,
    "classify": cmd_classify,
    "graph": cmd_graph,
    "chroma": cmd_chroma,
    "linecolor": cmd_linecolor,
    "product": cmd_product,
    "kdist": cmd_kdist,
    "parity": cmd_parity,
    "report": cmd_report,
    "verify-paper": cmd_verify_paper,
}


# ----------------------------------------------------------------------


def _context(args: argparse.Namespace) -> CommandContext:
    defaults = load_defaults(args.config)
    seed = args.seed if args.seed is not None else defaults.seed
    threads = args.threads if args.threads is not None else defaults.threads
    budget = args.budget if args.budget is not None else defaults.node_budget
    if threads < 1:
        raise InputError("--threads must be >= 1")
    if budget < 0:
        raise InputError("--budget must be >= 0")
    return CommandContext(seed, threads, budget, defaults, Limits.from_env())


def _configure_log(args: argparse.Namespace, defaults: Defaults) -> None:
    if args.log == "-":
        set_log_path(None)
    elif args.log:
        set_log_path(args.log)
    else:
        set_log_path(os.path.join(defaults.log_dir, "distchroma.jsonl.gz"))


def _run(args: argparse.Namespace, ctx: CommandContext, storage: Optional[SQLiteStorage]) -> Result:
    handler = COMMANDS[args.command]
    if args.command == "verify-paper":
        return handler(args, ctx, storage)
    return handler(args, ctx)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        ctx = _context(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _configure_log(args, ctx.defaults)
    log_event({"event": "command_started", "command": args.command, "argv": argv, "seed": ctx.seed})

    storage: Optional[SQLiteStorage] = None
    try:
        storage = SQLiteStorage(args.db) if args.db else None
        try:
            results, code = _run(args, ctx, storage)
        except BudgetExhausted as exc:
            results = {
                "error": "budget_exhausted",
                "what": exc.what,
                "nodes_explored": exc.nodes_explored,
                "bounds": exc.bounds,
            }
            code = 2
        report = RunReport(
            command=argv,
            inputs=ctx.inputs,
            results=results,
            seed=ctx.seed,
            wall_time_s=time.perf_counter() - start,
            exit_code=code,
        )
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
        if storage is not None:
            storage.save_run(report)
    except (InputError, OSError, sqlite3.Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        log_event({"event": "command_finished", "command": args.command, "exit_code": 1, "error": str(exc)})
        return 1
    except CertificateError as exc:
        print(f"certificate error: {exc}", file=sys.stderr)
        log_event({"event": "command_finished", "command": args.command, "exit_code": 3, "error": str(exc)})
        return 3
    finally:
        if storage is not None:
            storage.close()

    log_event({
        "event": "command_finished",
        "command": args.command,
        "exit_code": code,
        "results_digest": report.results_digest(),
    })
    return code


__all__ = [
    "main",
    "COMMANDS",
    "CommandContext",
    "cmd_gen",
    "cmd_classify",
    "cmd_graph",
    "cmd_chroma",
    "cmd_linecolor",
    "cmd_product",
    "cmd_kdist",
    "cmd_parity",
    "cmd_report",
    "cmd_verify_paper",
]
