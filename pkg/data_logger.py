import gzip, json, os, time, threading
from typing import Optional

_LOG_PATH: Optional[str] = os.path.join("logs", "distchroma.jsonl.gz")
_lock = threading.Lock()


def set_log_path(path: Optional[str]) -> None:
    """Redirect the timeline to ``path``; ``None`` disables it."""
    global _LOG_PATH
    _LOG_PATH = path


def log_event(event: dict) -> None:
    """Append an event as JSON line into the compressed run timeline."""
    path = _LOG_PATH
    if not path:
        return
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        payload = {"ts": int(time.time() * 1000), **event}
        with _lock, gzip.open(path, "at", encoding="utf-8") as f:
            f.write(json.dumps(payload, ensure_ascii=False, default=str) + "\n")
    except Exception:
        pass
