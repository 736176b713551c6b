"""SQLite-backed persistence for run reports and suite events."""
from __future__ import annotations

import json
import sqlite3
import threading
from datetime import datetime
from pathlib import Path
from typing import Any, List, Optional, Tuple

from .models import RunReport, SuiteEvent

DB_FILENAME = "distchroma.db"


class SQLiteStorage:
    """Persist run reports and suite events into SQLite."""

    def __init__(self, db_path: Optional[str] = None) -> None:
        self.db_path = db_path or DB_FILENAME
        # suite workers may report from pool threads
        self.conn = sqlite3.connect(self.db_path, check_same_thread=False)
        self.conn.row_factory = sqlite3.Row
        self._lock = threading.Lock()
        self._init_db()

    # ------------------------------------------------------------------
    def _init_db(self) -> None:
        """Create tables if they do not yet exist."""
        schema_path = Path(__file__).resolve().parent.parent / "schema.sql"
        with open(schema_path, "r", encoding="utf-8") as fh:
            self.conn.executescript(fh.read())
        self.conn.commit()

    # ------------------------------------------------------------------
    # Runs
    def save_run(self, report: RunReport) -> int:
        with self._lock, self.conn:
            cur = self.conn.execute(
                """
                INSERT INTO runs (command, seed, inputs_json, results_json, results_digest, wall_time_s, exit_code)
                VALUES (?, ?, ?, ?, ?, ?, ?)
                """,
                (
                    json.dumps(report.command),
                    report.seed,
                    json.dumps(report.inputs, sort_keys=True),
                    json.dumps(report.results, sort_keys=True, default=str),
                    report.results_digest(),
                    report.wall_time_s,
                    report.exit_code,
                ),
            )
            return int(cur.lastrowid)

    def _row_to_report(self, row: sqlite3.Row) -> RunReport:
        return RunReport(
            command=json.loads(row["command"]),
            inputs=json.loads(row["inputs_json"]) if row["inputs_json"] else {},
            results=json.loads(row["results_json"]) if row["results_json"] else {},
            seed=row["seed"],
            wall_time_s=row["wall_time_s"] or 0.0,
            exit_code=row["exit_code"] or 0,
        )

    def get_run(self, run_id: int) -> Optional[RunReport]:
        with self._lock:
            row = self.conn.execute(
                "SELECT command, seed, inputs_json, results_json, wall_time_s, exit_code FROM runs WHERE run_id = ?",
                (run_id,),
            ).fetchone()
        if row is None:
            return None
        return self._row_to_report(row)

    def iter_runs(self) -> List[Tuple[int, RunReport]]:
        """Return all stored runs, oldest first."""
        with self._lock:
            rows = self.conn.execute(
                "SELECT run_id, command, seed, inputs_json, results_json, wall_time_s, exit_code FROM runs ORDER BY run_id"
            ).fetchall()
        return [(r["run_id"], self._row_to_report(r)) for r in rows]

    def run_digests(self) -> List[str]:
        with self._lock:
            rows = self.conn.execute("SELECT results_digest FROM runs ORDER BY run_id").fetchall()
        return [r[0] for r in rows]

    # ------------------------------------------------------------------
    # Events
    def append_event(self, event: SuiteEvent) -> None:
        with self._lock, self.conn:
            self.conn.execute(
                """
                INSERT INTO events (ts, level, scope, claim, message, payload_json)
                VALUES (?, ?, ?, ?, ?, ?)
                """,
                (
                    event.ts.isoformat(),
                    event.level,
                    event.scope,
                    event.claim,
                    event.message,
                    json.dumps(event.payload, default=str) if event.payload else None,
                ),
            )

    def get_events(self, claim: Optional[str] = None) -> List[SuiteEvent]:
        query = "SELECT ts, level, scope, claim, message, payload_json FROM events"
        params: List[Any] = []
        if claim is not None:
            query += " WHERE claim = ?"
            params.append(claim)
        query += " ORDER BY event_id"
        with self._lock:
            rows = self.conn.execute(query, params).fetchall()

        events = []
        for row in rows:
            payload = json.loads(row["payload_json"]) if row["payload_json"] else None
            events.append(
                SuiteEvent(
                    ts=datetime.fromisoformat(row["ts"]),
                    level=row["level"],
                    scope=row["scope"],
                    claim=row["claim"],
                    message=row["message"],
                    payload=payload,
                )
            )
        return events

    # ------------------------------------------------------------------

    def close(self) -> None:
        with self._lock:
            self.conn.close()
