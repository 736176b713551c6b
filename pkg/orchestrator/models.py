from __future__ import annotations

"""Data models for run reports and the claim suite."""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

from utils.digest import payload_digest


@dataclass
class RunReport:
    """Outcome of one CLI command.

    ``results`` is the deterministic payload; ``wall_time_s`` is the only
    field that varies between identical runs.
    """

    command: List[str]
    inputs: Dict[str, str]
    results: Dict[str, Any]
    seed: int
    wall_time_s: float = 0.0
    exit_code: int = 0

    def results_digest(self) -> str:
        return payload_digest(self.results)

    def to_json(self) -> Dict[str, Any]:
        return {
            "command": list(self.command),
            "inputs": dict(self.inputs),
            "results": self.results,
            "seed": self.seed,
            "wall_time_s": round(self.wall_time_s, 6),
            "exit_code": self.exit_code,
        }


CLAIM_PASS = "pass"
CLAIM_FAIL = "fail"
CLAIM_BUDGET = "budget"


@dataclass
class ClaimResult:
    """Verdict of one reproduction claim."""

    claim: str
    status: str
    details: Dict[str, Any] = field(default_factory=dict)
    elapsed_s: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == CLAIM_PASS

    def to_json(self, include_timing: bool = False) -> Dict[str, Any]:
        out: Dict[str, Any] = {"claim": self.claim, "status": self.status, "details": self.details}
        if include_timing:
            out["elapsed_s"] = round(self.elapsed_s, 6)
        return out


@dataclass
class SuiteEvent:
    """Event emitted by the claim suite for listeners and storage."""

    ts: datetime
    level: str
    scope: str
    claim: Optional[str]
    message: str
    payload: Optional[Dict[str, Any]]
