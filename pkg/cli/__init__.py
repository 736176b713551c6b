"""Command-line surface: ``python main.py <command> ...``."""
from __future__ import annotations

from .commands import COMMANDS, main
from .parser import build_parser

__all__ = ["main", "build_parser", "COMMANDS"]
