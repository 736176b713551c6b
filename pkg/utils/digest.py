"""Content digests embedded in run reports."""
from __future__ import annotations

import hashlib
import json
from typing import Any

_CHUNK = 1 << 16


def file_digest(path: str) -> str:
    """``sha256:<hex>`` of a file's bytes."""
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(_CHUNK), b""):
            h.update(chunk)
    return "sha256:" + h.hexdigest()


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def payload_digest(payload: Any) -> str:
    """``sha256:<hex>`` of the canonical JSON form of ``payload``."""
    return "sha256:" + hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


__all__ = ["file_digest", "canonical_json", "payload_digest"]
