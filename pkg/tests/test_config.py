"""Tests for settings loading and validation."""

import pytest

from cli.schemas import RunConfig
from config import Settings


def test_defaults(monkeypatch):
    monkeypatch.delenv("DEFAULT_ORDER", raising=False)
    settings = Settings(_env_file=None)
    assert settings.default_order == 6
    assert settings.oracle_order == 3
    assert settings.output_format == "text"


def test_environment_override(monkeypatch):
    monkeypatch.setenv("DEFAULT_ORDER", "9")
    monkeypatch.setenv("SEED", "11")
    settings = Settings(_env_file=None)
    assert settings.default_order == 9
    assert settings.seed == 11


def test_invalid_values_are_collected():
    with pytest.raises(ValueError) as exc_info:
        Settings(
            _env_file=None, default_order=-1, output_format="xml", log_level="LOUD"
        )
    message = str(exc_info.value)
    assert "DEFAULT_ORDER" in message
    assert "OUTPUT_FORMAT" in message
    assert "LOG_LEVEL" in message


def test_flags_override_settings(settings):
    config = RunConfig.from_settings(settings, order=None, seed=3, q=3)
    assert config.order == settings.default_order
    assert config.seed == 3
    assert config.q == 3
