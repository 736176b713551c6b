import os
import sys

import pytest

sys.path.append(os.path.dirname(os.path.dirname(__file__)))

import data_logger  # noqa: E402


@pytest.fixture(autouse=True)
def _no_timeline(monkeypatch):
    monkeypatch.setattr(data_logger, "_LOG_PATH", None)
