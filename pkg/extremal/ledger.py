"""Instance-level bound ledger for the k-distance chromatic number.

For every tried forbidden set the exact chromatic number (or, when the
solver runs out of budget, a maximum clique) gives a lower bound, and the
product of one coloring per forbidden class gives an upper bound. A large
k-distance set adds a lower bound of its own: forbidding exactly its classes
turns it into a clique.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from config import Defaults, Limits
from data_logger import log_event
from errors import BudgetExhausted, CertificateError, InputError
from graphs.classes import DistanceClassMatrix, classify
from graphs.graph import DistanceGraph, build_graph
from numerics.points import PointSet
from numerics.rational import format_rational
from solver.bipartite import bipartition
from solver.coloring import Coloring
from solver.dsatur import chromatic_exact
from constructions.product import iterated_product
from .clique import max_clique
from .kdistance import max_k_distance_set

Space = Union[PointSet, DistanceClassMatrix]


@dataclass(frozen=True)
class Bound:
    value: int
    certificate: Dict[str, Any]

    def to_json(self) -> Dict[str, Any]:
        return {"value": self.value, "certificate": self.certificate}


@dataclass
class BoundLedger:
    space: str
    k: int
    lower: Optional[Bound] = None
    upper: Optional[Bound] = None
    strategy: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def concluded(self) -> Optional[int]:
        if self.lower is not None and self.upper is not None and self.lower.value == self.upper.value:
            return self.lower.value
        return None

    def to_json(self) -> Dict[str, Any]:
        return {
            "space": self.space,
            "k": self.k,
            "lower": self.lower.to_json() if self.lower else None,
            "upper": self.upper.to_json() if self.upper else None,
            "concluded": self.concluded,
            "strategy": self.strategy,
            "notes": list(self.notes),
        }


# ----------------------------------------------------------------------
# Forbidden-set selection


def forbidden_selection(
    m: DistanceClassMatrix,
    k: int,
    seed: int = 0,
    exhaustive_limit: int = 500,
    random_count: int = 100,
) -> Tuple[List[Tuple[int, ...]], str]:
    """Forbidden class sets to try and the name of the rule that chose them.

    All ``k``-subsets of the realized classes when there are at most
    ``exhaustive_limit`` of them; otherwise the ``k`` most frequent classes
    followed by ``random_count`` seeded random ``k``-subsets.
    """

    ids = m.class_ids()
    if not ids:
        return [], "no_classes"
    if len(ids) <= k:
        return [tuple(ids)], "all_classes"
    if math.comb(len(ids), k) <= exhaustive_limit:
        return list(itertools.combinations(ids, k)), "all_k_subsets"
    freq = m.class_frequencies()
    top = tuple(sorted(sorted(ids, key=lambda c: (-freq.get(c, 0), c))[:k]))
    chosen = [top]
    seen = {top}
    rng = np.random.default_rng(seed)
    for _ in range(random_count):
        pick = tuple(sorted(int(c) for c in rng.choice(ids, size=k, replace=False)))
        if pick not in seen:
            seen.add(pick)
            chosen.append(pick)
    return chosen, "frequent_plus_random"


# ----------------------------------------------------------------------
# Per-set evaluation


@dataclass
class _SetOutcome:
    forbidden: Tuple[int, ...]
    lower: Bound
    upper: Optional[Bound]
    notes: List[str]


def _lower_for(g: DistanceGraph, forbidden: Tuple[int, ...], budget: Optional[int], limits: Limits) -> Tuple[Bound, List[str]]:
    try:
        result = chromatic_exact(g, budget=budget, limits=limits)
    except BudgetExhausted as exc:
        clique = max_clique(g, budget=budget, limits=limits)
        if not clique.verify(g):
            raise CertificateError(f"clique for classes {list(forbidden)} does not re-verify")
        cert = {"type": "clique", "forbidden": list(forbidden), "vertices": list(clique.vertices)}
        note = f"classes {list(forbidden)}: exact solve exhausted after {exc.nodes_explored} nodes, clique used"
        return Bound(clique.size, cert), [note]
    if not result.verify(g):
        raise CertificateError(f"chromatic result for classes {list(forbidden)} does not re-verify")
    cert = {
        "type": "exact",
        "forbidden": list(forbidden),
        "clique": list(result.clique),
        "coloring": list(result.coloring.assignment),
        "proof": result.certificate,
    }
    return Bound(result.chi, cert), []


def _class_coloring(
    m: DistanceClassMatrix,
    cid: int,
    budget: Optional[int],
    limits: Limits,
) -> Tuple[Coloring, str]:
    g = build_graph(m, classes=[cid])
    split = bipartition(g)
    if split.is_bipartite:
        return split.to_coloring(), "bipartition"
    return chromatic_exact(g, budget=budget, limits=limits).coloring, "exact"


def _upper_for(
    m: DistanceClassMatrix,
    g: DistanceGraph,
    forbidden: Tuple[int, ...],
    budget: Optional[int],
    limits: Limits,
) -> Tuple[Optional[Bound], List[str]]:
    factors = []
    colorings = []
    try:
        for cid in forbidden:
            coloring, method = _class_coloring(m, cid, budget, limits)
            colorings.append(coloring)
            factors.append({"class": cid, "colors": coloring.color_count, "method": method})
    except BudgetExhausted:
        return None, [f"classes {list(forbidden)}: no product coloring within budget"]
    product = iterated_product(colorings)
    if not product.is_valid(g):
        raise CertificateError(f"product coloring for classes {list(forbidden)} does not re-verify")
    cert = {
        "type": "product",
        "forbidden": list(forbidden),
        "factors": factors,
        "coloring": list(product.assignment),
    }
    return Bound(product.color_count, cert), []


def _evaluate(
    m: DistanceClassMatrix,
    forbidden: Tuple[int, ...],
    budget: Optional[int],
    limits: Limits,
) -> _SetOutcome:
    g = build_graph(m, classes=forbidden)
    lower, notes = _lower_for(g, forbidden, budget, limits)
    upper, more = _upper_for(m, g, forbidden, budget, limits)
    return _SetOutcome(forbidden, lower, upper, notes + more)


def _kdistance_bound(
    m: DistanceClassMatrix,
    k: int,
    budget: Optional[int],
    limits: Limits,
) -> Optional[Bound]:
    found = max_k_distance_set(m, k, budget=budget, limits=limits)
    if not found.verify(m):
        raise CertificateError("k-distance set does not re-verify")
    if found.classes and not build_graph(m, classes=found.classes).is_clique(found.subset):
        raise CertificateError("k-distance set is not a clique of its own classes")
    cert = {
        "type": "k_distance_set",
        "subset": list(found.subset),
        "classes": list(found.classes),
        "optimal": found.optimal,
    }
    return Bound(found.size, cert)


# ----------------------------------------------------------------------


def _resolve_explicit(
    m: DistanceClassMatrix,
    classes: Optional[Iterable[int]],
    distances: Optional[Iterable[Fraction]],
) -> Tuple[Tuple[int, ...], List[str]]:
    g = build_graph(m, classes=classes, distances=distances)
    notes = [f"squared distance {format_rational(d)} unrealized" for d in g.unrealized]
    return tuple(sorted(g.forbidden_classes)), notes


def bound_report(
    space: Space,
    k: int,
    classes: Optional[Sequence[int]] = None,
    distances: Optional[Sequence[Fraction]] = None,
    budget: Optional[int] = None,
    seed: int = 0,
    threads: int = 1,
    limits: Optional[Limits] = None,
    defaults: Optional[Defaults] = None,
    space_name: str = "",
) -> BoundLedger:
    """Assemble lower and upper bounds for ``space`` with ``k`` forbidden classes.

    With ``classes`` or ``distances`` only that forbidden set is evaluated;
    otherwise sets come from :func:`forbidden_selection`. Results do not
    depend on ``threads``. The per-set work is pure Python and holds the GIL,
    so ``threads`` changes scheduling only, not throughput.
    """

    if k < 1:
        raise InputError("k must be >= 1")
    if threads < 1:
        raise InputError("threads must be >= 1")
    limits = limits or Limits.from_env()
    defaults = defaults or Defaults()
    matrix = classify(space, limits) if isinstance(space, PointSet) else space
    ledger = BoundLedger(space_name or matrix.provenance, k)

    explicit = classes is not None or distances is not None
    if explicit:
        chosen, notes = _resolve_explicit(matrix, classes, distances)
        ledger.notes.extend(notes)
        if len(chosen) > k:
            raise InputError(f"{len(chosen)} forbidden classes given for k={k}")
        sets = [chosen] if chosen else []
        mode = "explicit"
    else:
        sets, mode = forbidden_selection(
            matrix, k, seed, defaults.exhaustive_subset_limit, defaults.random_subset_count
        )
    ledger.strategy = {"mode": mode, "sets_tried": len(sets), "seed": seed}
    if mode == "frequent_plus_random":
        ledger.notes.append("upper bound covers the tried forbidden sets only")

    if threads == 1:
        outcomes = [_evaluate(matrix, s, budget, limits) for s in sets]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(lambda s: _evaluate(matrix, s, budget, limits), sets))

    for out in outcomes:
        ledger.notes.extend(out.notes)
        if ledger.lower is None or out.lower.value > ledger.lower.value:
            ledger.lower = out.lower
    uppers = [out.upper for out in outcomes]
    if uppers and all(u is not None for u in uppers):
        ledger.upper = max(uppers, key=lambda u: u.value)  # first maximum wins

    if not explicit and matrix.size <= limits.max_search_vertices:
        kd = _kdistance_bound(matrix, k, budget, limits)
        if kd is not None and (ledger.lower is None or kd.value > ledger.lower.value):
            ledger.lower = kd

    if ledger.lower and ledger.upper and ledger.lower.value > ledger.upper.value:
        if mode == "frequent_plus_random":
            ledger.notes.append("k-distance set exceeds every tried upper bound; upper bound dropped")
            ledger.upper = None
        else:
            raise CertificateError("lower bound exceeds upper bound")

    log_event({
        "event": "ledger_built",
        "space": ledger.space,
        "k": k,
        "mode": mode,
        "sets": len(sets),
        "lower": ledger.lower.value if ledger.lower else None,
        "upper": ledger.upper.value if ledger.upper else None,
    })
    return ledger


__all__ = ["Bound", "BoundLedger", "forbidden_selection", "bound_report"]
