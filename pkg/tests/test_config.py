from pathlib import Path

import pytest

from config import Defaults, Limits, load_defaults
from errors import InputError


def test_limits_from_env_mapping():
    limits = Limits.from_env({"DISTCHROMA_MAX_POINTS": "50", "DISTCHROMA_MAX_SEARCH_VERTICES": " "})
    assert limits.max_points == 50
    assert limits.max_search_vertices == Limits().max_search_vertices
    assert Limits.from_env({"DISTCHROMA_MAX_LINE_BOUNDARY_POINTS": "7"}).max_line_boundary_points == 7


@pytest.mark.parametrize("raw", ["abc", "0", "-3"])
def test_limits_reject_bad_values(raw):
    with pytest.raises(InputError):
        Limits.from_env({"DISTCHROMA_MAX_GRAPH_VERTICES": raw})


def test_load_defaults_without_file():
    assert load_defaults(None) == Defaults()


def test_load_defaults_overrides_and_ignores_unknown(tmp_path):
    path = tmp_path / "defaults.yaml"
    path.write_text("seed: 7\nnode_budget: '1000'\nline_samples: 20\nsurprise: true\n", encoding="utf-8")
    defaults = load_defaults(str(path))
    assert defaults.seed == 7
    assert defaults.node_budget == 1000
    assert defaults.line_samples == 20
    assert defaults.threads == 1


def test_shipped_defaults_match_dataclass():
    shipped = Path(__file__).resolve().parent.parent / "configs" / "defaults.yaml"
    assert load_defaults(str(shipped)) == Defaults()


@pytest.mark.parametrize("text", ["seed: [1, 2\n", "- 1\n- 2\n", "seed: many\n"])
def test_load_defaults_rejects_malformed(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(InputError):
        load_defaults(str(path))
