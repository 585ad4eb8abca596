import pytest
from click.testing import CliRunner

from pbern import config


@pytest.fixture
def runner():
    """Create a Click CLI test runner."""
    return CliRunner()


@pytest.fixture(autouse=True)
def config_dir(tmp_path, monkeypatch):
    """Point the defaults file at a temporary directory."""
    config_dir = tmp_path / "config"
    monkeypatch.setattr(config, "DEFAULT_CONFIG_DIR", str(config_dir))
    monkeypatch.setattr(config, "DEFAULT_CONFIG_FILE", str(config_dir / "defaults"))
    return config_dir


@pytest.fixture
def temp_dir(tmp_path):
    """Create a temporary directory for output files."""
    out = tmp_path / "out"
    out.mkdir()
    return out
