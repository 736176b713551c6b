"""Argument parser for the ``distchroma`` command line."""
from __future__ import annotations

import argparse
import sys
from typing import NoReturn

from extremal.fixtures import FIXTURE_NAMES


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1 like every other input error."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="seed for every random choice (default 0)")
    common.add_argument("--threads", type=int, default=None, help="bound-report worker threads (scheduling only; results are unchanged)")
    common.add_argument("--budget", type=int, default=None, help="node budget for exact searches")
    common.add_argument("--config", default=None, help="YAML file overriding the defaults")
    common.add_argument("--db", default=None, help="SQLite file receiving the run report")
    common.add_argument("--log", default=None, help="gzip JSONL timeline path ('-' disables)")
    return common


def _space_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--input", help="point set or class matrix JSON")
    group.add_argument("--fixture", help=f"named configuration: {', '.join(FIXTURE_NAMES)}")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(
        prog="distchroma",
        description="Chromatic numbers of distance graphs with forbidden distances",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="write a grid or fixture point set")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--dim", type=int, help="grid dimension")
    src.add_argument("--fixture", help=f"named configuration: {', '.join(FIXTURE_NAMES)}")
    p.add_argument("--side", type=int, default=None, help="grid coordinates run over 0..side")
    p.add_argument("--den", type=int, default=1, help="grid denominator")
    p.add_argument("--scale", default=None, help="rational scale factor applied to the points")
    p.add_argument("--out", required=True, help="output JSON path")

    p = sub.add_parser("classify", parents=[common], help="squared-distance classes of a point set")
    _space_source(p)
    p.add_argument("--out", default=None, help="class matrix JSON path")

    p = sub.add_parser("graph", parents=[common], help="build the forbidden-distance graph")
    _space_source(p)
    forbid = p.add_mutually_exclusive_group(required=True)
    forbid.add_argument("--forbid", help="comma-separated squared distances (rational strings)")
    forbid.add_argument("--classes", help="comma-separated class IDs")
    p.add_argument("--out", required=True, help="DIMACS output path")

    p = sub.add_parser("chroma", parents=[common], help="color a DIMACS graph")
    p.add_argument("--graph", required=True, help="DIMACS input path")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--greedy", dest="mode", action="store_const", const="greedy")
    mode.add_argument("--bipartite", dest="mode", action="store_const", const="bipartite")
    mode.add_argument("--brute", dest="mode", action="store_const", const="brute")
    p.add_argument("--order", choices=["index", "smallest-last"], default="index", help="vertex order for --greedy")
    p.add_argument("--points", default=None, help="2-D point set drawn with --svg")
    p.add_argument("--svg", default=None, help="best-effort SVG of the coloring")
    p.set_defaults(mode="exact")

    p = sub.add_parser("linecolor", parents=[common], help="three-color scheme for two distances on the line")
    p.add_argument("--s1", required=True)
    p.add_argument("--s2", required=True)
    action = p.add_mutually_exclusive_group(required=True)
    action.add_argument("--query", default=None, help="rational point to color")
    action.add_argument("--verify", action="store_true")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--range", dest="range_", default=None, help="verification range (rational)")

    p = sub.add_parser("product", parents=[common], help="product coloring of two forbidden sets")
    _space_source(p)
    first = p.add_mutually_exclusive_group(required=True)
    first.add_argument("--forbid1")
    first.add_argument("--classes1")
    second = p.add_mutually_exclusive_group(required=True)
    second.add_argument("--forbid2")
    second.add_argument("--classes2")

    p = sub.add_parser("kdist", parents=[common], help="largest k-distance subset")
    _space_source(p)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("parity", parents=[common], help="odd-parity lemma tools")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--c-max", type=int, default=None, help="enumerate primitive solutions up to c")
    p.add_argument("--check", default=None, help="a,b,c triple to check against p, q")
    p.add_argument("--distance", default=None, help="classify a squared distance as p/q or 2p/q")

    p = sub.add_parser("report", parents=[common], help="bound ledger for a space")
    _space_source(p)
    p.add_argument("--k", type=int, required=True)
    forbid = p.add_mutually_exclusive_group()
    forbid.add_argument("--forbid", help="evaluate only these squared distances")
    forbid.add_argument("--classes", help="evaluate only these class IDs")
    p.add_argument("--out", default=None, help="ledger JSON path")

    p = sub.add_parser("verify-paper", parents=[common], help="run the reproduction claims")
    p.add_argument("--only", action="append", default=None, help="claim ID or alias such as prop5c (repeatable or comma-separated)")
    return parser


__all__ = ["build_parser"]
