"""Prepare py.test."""
import json

import pytest

from canonstrip.config import Config


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch):
    """Keep user canonstrip.ini files and environment overrides out of the tests."""
    for name in ("APPDATA", "XDG_CONFIG_HOME", "HOME", "canonstrip_site"):
        monkeypatch.delenv(name, raising=False)
    Config.CONFIG = None  # Force config file reload
    yield
    Config.CONFIG = None


@pytest.fixture
def write_json(tmp_path):
    """Return a function that writes JSON data to a file under ``tmp_path``."""

    def write(name, data):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data, indent=2))
        return str(path)

    return write
