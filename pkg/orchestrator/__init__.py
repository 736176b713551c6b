"""Helper exports for orchestrator package."""
from .models import ClaimResult, RunReport, SuiteEvent
from .storage import SQLiteStorage
from .suite import ClaimSuite, suite_exit_code

__all__ = [
    "ClaimSuite",
    "ClaimResult",
    "RunReport",
    "SuiteEvent",
    "SQLiteStorage",
    "suite_exit_code",
]
