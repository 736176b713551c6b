"""Claim suite reproducing every finite certificate of the toolkit's results."""
from __future__ import annotations

import time
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import Defaults, Limits
from constructions.line_scheme import Color, LineColoringScheme, random_distance_pairs, verify_line_scheme
from constructions.parity import DistanceKind, check_odd_parity_solution, distance_kind, enumerate_odd_parity_solutions
from constructions.product import product_coloring
from data_logger import log_event
from errors import BudgetExhausted, InputError
from extremal.fixtures import fixture
from extremal.kdistance import kdistance_bruteforce, max_k_distance_set
from extremal.ledger import bound_report
from graphs.classes import DistanceClassMatrix, classify
from graphs.graph import DistanceGraph, build_graph
from numerics.points import PointSet, find_translates, generate_grid
from solver.bipartite import bipartition
from solver.bruteforce import chromatic_bruteforce
from solver.dsatur import chromatic_exact
from solver.greedy import greedy_coloring
from .models import CLAIM_BUDGET, CLAIM_FAIL, CLAIM_PASS, ClaimResult, SuiteEvent
from .storage import SQLiteStorage

ClaimOutcome = Tuple[bool, Dict[str, Any]]

KDISTANCE_FIXTURE_TARGETS: Tuple[Tuple[str, int, int], ...] = (
    ("line(5)", 2, 3),
    ("square", 2, 4),
    ("hypercube(3)", 3, 8),
    ("johnson(3,2)", 2, 6),
    ("icosahedron_matrix", 3, 12),
    ("regular_polygon_matrix(5)", 2, 5),
)

TWICE_ODD_DISTANCES = (Fraction(2), Fraction(10), Fraction(50))
ODD_PARAMETERS = (1, 3, 5, 7, 9)
LATTICE_TRIANGLE = ((0, 0, 0), (1, 1, 0), (1, 0, 1))

# Short names accepted by --only, keyed to the claim they select.
CLAIM_ALIASES: Dict[str, str] = {
    "prop3_lower": "line_clique_lower",
    "prop3_upper": "line_degree_upper",
    "prop5a": "two_distance_line_scheme",
    "prop5b_bipartite": "rational_plane_bipartite",
    "prop5b_parity": "odd_parity_lemma",
    "prop5b_triangle": "cubic_lattice_triangle",
    "prop5c": "plane_two_distance_value",
    "prop4_fixtures": "k_distance_fixtures",
    "oracle": "oracle_agreement",
    "prop2_product": "product_coloring",
}


class ClaimSuite:
    """Runs the reproduction claims and reports one verdict per claim."""

    def __init__(
        self,
        storage: Optional[SQLiteStorage] = None,
        budget: Optional[int] = None,
        seed: int = 0,
        threads: int = 1,
        defaults: Optional[Defaults] = None,
        limits: Optional[Limits] = None,
    ) -> None:
        self.storage = storage
        self.budget = budget
        self.seed = seed
        self.threads = threads
        self.defaults = defaults or Defaults()
        self.limits = limits or Limits.from_env()
        self._callbacks: List[Callable[[SuiteEvent], None]] = []
        self.claims: Dict[str, Callable[[], ClaimOutcome]] = {
            "line_clique_lower": self._line_clique_lower,
            "line_degree_upper": self._line_degree_upper,
            "two_distance_line_scheme": self._two_distance_line_scheme,
            "rational_plane_bipartite": self._rational_plane_bipartite,
            "odd_parity_lemma": self._odd_parity_lemma,
            "cubic_lattice_triangle": self._cubic_lattice_triangle,
            "plane_two_distance_value": self._plane_two_distance_value,
            "k_distance_fixtures": self._k_distance_fixtures,
            "oracle_agreement": self._oracle_agreement,
            "product_coloring": self._product_coloring,
        }

    # ------------------------------------------------------------------
    def stream_events(self, callback: Callable[[SuiteEvent], None]) -> None:
        """Register a callback receiving every suite event."""
        self._callbacks.append(callback)

    def _emit(
        self,
        level: str,
        claim: Optional[str],
        message: str,
        payload: Optional[Dict[str, Any]] = None,
    ) -> None:
        event = SuiteEvent(
            ts=datetime.now(timezone.utc),
            level=level,
            scope="suite",
            claim=claim,
            message=message,
            payload=payload,
        )
        log_event({"event": message, "claim": claim, **(payload or {})})
        if self.storage is not None:
            self.storage.append_event(event)
        for cb in list(self._callbacks):
            try:
                cb(event)
            except Exception:
                pass

    # ------------------------------------------------------------------
    def run(self, only: Optional[Sequence[str]] = None) -> List[ClaimResult]:
        """Run the selected claims in order; ``only`` accepts claim names or aliases."""

        if not only:
            names = list(self.claims)
        else:
            names = list(dict.fromkeys(CLAIM_ALIASES.get(n, n) for n in only))
        unknown = [n for n in names if n not in self.claims]
        if unknown:
            raise InputError(f"unknown claims {unknown}; known: {', '.join(self.claims)}")
        return [self._run_claim(name) for name in names]

    def _run_claim(self, name: str) -> ClaimResult:
        self._emit("INFO", name, "claim_started")
        start = time.perf_counter()
        try:
            ok, details = self.claims[name]()
        except BudgetExhausted as exc:
            details = {"what": exc.what, "nodes_explored": exc.nodes_explored, "bounds": exc.bounds}
            result = ClaimResult(name, CLAIM_BUDGET, details, time.perf_counter() - start)
            self._emit("WARNING", name, "claim_budget_exhausted", details)
            return result
        status = CLAIM_PASS if ok else CLAIM_FAIL
        result = ClaimResult(name, status, details, time.perf_counter() - start)
        self._emit(
            "INFO" if ok else "ERROR",
            name,
            "claim_passed" if ok else "claim_failed",
            {"elapsed_s": round(result.elapsed_s, 3)},
        )
        return result

    # ------------------------------------------------------------------
    # Helpers
    def _exact(self, g: DistanceGraph):
        return chromatic_exact(g, budget=self.budget, limits=self.limits)

    def _rng(self, salt: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, salt])

    # ------------------------------------------------------------------
    # Claims
    def _line_clique_lower(self) -> ClaimOutcome:
        values: Dict[str, int] = {}
        ok = True
        for k in range(1, 7):
            ps = generate_grid(1, k, limits=self.limits)
            g = build_graph(classify(ps, self.limits), distances=[Fraction(j * j) for j in range(1, k + 1)])
            chi = self._exact(g).chi
            values[str(k)] = chi
            ok = ok and chi == k + 1
        return ok, {"chi_by_k": values}

    def _line_degree_upper(self) -> ClaimOutcome:
        rng = self._rng(2)
        ps = generate_grid(1, 40, limits=self.limits)
        matrix = classify(ps, self.limits)
        violations = []
        for i in range(50):
            k = int(rng.integers(1, 5))
            steps = sorted(int(d) for d in rng.choice(np.arange(1, 41), size=k, replace=False))
            g = build_graph(matrix, distances=[Fraction(d * d) for d in steps])
            chi = self._exact(g).chi
            greedy = greedy_coloring(g).color_count
            if chi > 2 * k or greedy > k + 1:
                violations.append({"instance": i, "distances": steps, "chi": chi, "greedy": greedy})
        return not violations, {"instances": 50, "violations": violations}

    def _two_distance_line_scheme(self) -> ClaimOutcome:
        pairs = random_distance_pairs(100, self.seed)
        failing = []
        for i, (s1, s2) in enumerate(pairs):
            scheme = LineColoringScheme.build(s1, s2)
            report = verify_line_scheme(
                scheme,
                self.defaults.line_samples,
                self.defaults.line_range,
                seed=self.seed + i,
                max_denominator=self.defaults.line_max_denominator,
                limits=self.limits,
            )
            if not report.ok:
                failing.append({"s1": str(s1), "s2": str(s2), "violations": len(report.violations)})
        corrupted = LineColoringScheme.build(
            1, 2, pairs=((Color.RED, Color.BLUE), (Color.RED, Color.BLUE), (Color.BLUE, Color.GREEN))
        )
        mutation = verify_line_scheme(
            corrupted, self.defaults.line_samples, self.defaults.line_range, seed=self.seed, limits=self.limits
        )
        details = {
            "pairs": len(pairs),
            "failing": failing,
            "mutation_violations": len(mutation.violations),
        }
        return not failing and not mutation.ok, details

    def _rational_plane_bipartite(self) -> ClaimOutcome:
        ps = generate_grid(2, 10, limits=self.limits)
        matrix = classify(ps, self.limits)
        checked: Dict[str, Any] = {}
        ok = True
        for d in TWICE_ODD_DISTANCES:
            kind = distance_kind(d).kind
            g = build_graph(matrix, distances=[d])
            split = bipartition(g)
            realized = not g.unrealized
            good = kind is DistanceKind.TWICE_ODD_RATIO and realized and split.is_bipartite and split.verify(g)
            checked[str(d)] = {"edges": g.edge_count, "bipartite": split.is_bipartite}
            ok = ok and good
        return ok, {"distances": checked}

    def _odd_parity_lemma(self) -> ClaimOutcome:
        total = 0
        exceptions = []
        for p in ODD_PARAMETERS:
            for q in ODD_PARAMETERS:
                for a, b, c in enumerate_odd_parity_solutions(p, q, 50):
                    total += 1
                    if not check_odd_parity_solution(a, b, c, p, q).all_odd:
                        exceptions.append([a, b, c, p, q])
        return not exceptions, {"solutions": total, "exceptions": exceptions}

    def _cubic_lattice_triangle(self) -> ClaimOutcome:
        ps = generate_grid(3, 2, limits=self.limits)
        g = build_graph(classify(ps, self.limits), distances=[Fraction(2)])
        result = self._exact(g)
        triangle = next((t for t in find_translates(ps, LATTICE_TRIANGLE) if g.is_clique(t)), None)
        details = {
            "chi": result.chi,
            "triangle": [[str(c) for c in ps[v]] for v in triangle] if triangle else None,
        }
        return result.chi >= 3 and triangle is not None and result.verify(g), details

    def _plane_two_distance_value(self) -> ClaimOutcome:
        ps = generate_grid(2, 5, limits=self.limits)
        ledger = bound_report(
            ps,
            2,
            distances=[Fraction(1), Fraction(2)],
            budget=self.budget,
            seed=self.seed,
            threads=self.threads,
            limits=self.limits,
            defaults=self.defaults,
            space_name="grid [0..5]^2",
        )
        return ledger.concluded == 4, {"ledger": ledger.to_json()}

    def _k_distance_fixtures(self) -> ClaimOutcome:
        found: Dict[str, int] = {}
        ok = True
        for name, k, expected in KDISTANCE_FIXTURE_TARGETS:
            space = fixture(name, self.limits)
            matrix = classify(space, self.limits) if isinstance(space, PointSet) else space
            result = max_k_distance_set(matrix, k, budget=self.budget, limits=self.limits)
            if not result.optimal:
                raise BudgetExhausted("max_k_distance_set", result.nodes_explored, {"lower": result.size})
            found[name] = result.size
            ok = ok and result.size == expected and result.verify(matrix)
        return ok, {"sizes": found}

    def _oracle_agreement(self) -> ClaimOutcome:
        rng = self._rng(9)
        chroma_mismatch = []
        for i in range(200):
            n = int(rng.integers(1, 10))
            density = float(rng.uniform(0.2, 0.8))
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
            g = DistanceGraph.from_edges(n, edges)
            exact = self._exact(g).chi
            brute = chromatic_bruteforce(g)
            if exact != brute:
                chroma_mismatch.append({"graph": i, "exact": exact, "brute": brute})
        kdist_mismatch = []
        window = generate_grid(2, 4, limits=self.limits)
        for i in range(100):
            n = int(rng.integers(2, 11))
            k = int(rng.integers(1, 4))
            pick = sorted(int(v) for v in rng.choice(len(window), size=n, replace=False))
            matrix = classify(window.subset(pick), self.limits)
            fast = max_k_distance_set(matrix, k, budget=self.budget, limits=self.limits)
            if not fast.optimal:
                raise BudgetExhausted("max_k_distance_set", fast.nodes_explored, {"lower": fast.size})
            slow = kdistance_bruteforce(matrix, k)
            if fast.size != slow.size:
                kdist_mismatch.append({"instance": i, "search": fast.size, "brute": slow.size})
        details = {"chromatic_mismatches": chroma_mismatch, "kdistance_mismatches": kdist_mismatch}
        return not chroma_mismatch and not kdist_mismatch, details

    def _product_coloring(self) -> ClaimOutcome:
        rng = self._rng(10)
        window = generate_grid(2, 6, limits=self.limits)
        violations = []
        tried = 0
        while tried < 50:
            n = int(rng.integers(6, 26))
            pick = sorted(int(v) for v in rng.choice(len(window), size=n, replace=False))
            matrix: DistanceClassMatrix = classify(window.subset(pick), self.limits)
            ids = matrix.class_ids()
            if len(ids) < 2:
                continue
            c1, c2 = (int(c) for c in rng.choice(ids, size=2, replace=False))
            g1 = build_graph(matrix, classes=[c1])
            g2 = build_graph(matrix, classes=[c2])
            first = self._exact(g1).coloring
            second = self._exact(g2).coloring
            combined = product_coloring(first, second)
            union = g1.union(g2)
            if not combined.is_valid(union) or combined.color_count != first.color_count * second.color_count:
                violations.append({"instance": tried, "classes": [c1, c2]})
            tried += 1
        return not violations, {"instances": tried, "violations": violations}


def suite_exit_code(results: Sequence[ClaimResult]) -> int:
    """3 when any claim failed, else 2 when any ran out of budget, else 0."""
    if any(r.status == CLAIM_FAIL for r in results):
        return 3
    if any(r.status == CLAIM_BUDGET for r in results):
        return 2
    return 0


__all__ = ["ClaimSuite", "suite_exit_code", "CLAIM_ALIASES", "KDISTANCE_FIXTURE_TARGETS"]
