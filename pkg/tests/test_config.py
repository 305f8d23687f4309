"""
Run configuration tests
"""
import pytest
from api.deps import build_run_config
from core import config
from core.exceptions import ConfigurationError
from models.family import Family


@pytest.fixture(autouse=True)
def fresh_settings():
    """Drop cached settings around each test."""
    config.get_setting.cache_clear()
    yield
    config.get_setting.cache_clear()


def test_defaults():
    run = build_run_config({})
    assert run.train_fraction == 0.8
    assert run.families == [Family.GARCH, Family.EGARCH]
    assert run.hidden_sizes == [1, 12, 50]
    assert run.refit_interval == 20
    assert run.search_config().p_max == 5
    assert run.train_config().learning_rate == 0.05


def test_flags_override_file_and_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("P_MAX", "3")
    monkeypatch.setenv("Q_MAX", "4")
    path = tmp_path / "run.env"
    path.write_text("TRAIN_FRACTION=0.7\nP_MAX=2\n", encoding="utf-8")
    run = build_run_config({"train_fraction": 0.6, "p_max": None,
                            "columns": ()}, path)
    assert run.train_fraction == 0.6
    assert run.p_max == 2
    assert run.q_max == 4
    assert run.columns == []


def test_comma_separated_lists(tmp_path):
    path = tmp_path / "run.env"
    path.write_text("families=GARCH, ARCH\nhidden_sizes=1,4\n"
                    "columns=sp500,ftse\n", encoding="utf-8")
    run = build_run_config({}, path)
    assert run.families == [Family.GARCH, Family.ARCH]
    assert run.hidden_sizes == [1, 4]
    assert run.columns == ["sp500", "ftse"]


def test_environment_lists(monkeypatch):
    monkeypatch.setenv("FAMILIES", "EGARCH")
    monkeypatch.setenv("HIDDEN_SIZES", "2,3")
    run = build_run_config({})
    assert run.families == [Family.EGARCH]
    assert run.hidden_sizes == [2, 3]


def test_unknown_key(tmp_path):
    path = tmp_path / "run.env"
    path.write_text("TRAIN_FRACTION=0.7\nMOMENTUM=0.9\n", encoding="utf-8")
    with pytest.raises(ConfigurationError) as info:
        build_run_config({}, path)
    assert "momentum" in str(info.value)


@pytest.mark.parametrize("flags", [
    {"train_fraction": 1.5},
    {"percent": True, "prices": True},
    {"hidden_sizes": (4, 4)},
    {"families": ("GJR",)},
])
def test_invalid_values(flags):
    with pytest.raises(ConfigurationError) as info:
        build_run_config(flags)
    assert info.value.exit_code == 2
    assert info.value.details["errors"]
