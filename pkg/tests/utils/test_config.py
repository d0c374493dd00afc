"""Tests for configuration loading."""
import pytest
import yaml

from src.utils.config import DEFAULT_CONFIG_PATH, ToolkitSettings, load_config, resolve_seed
from src.utils.exceptions import ConfigError


def test_bundled_config_loads(monkeypatch):
    """Bundled config loads."""
    monkeypatch.delenv('DDVV_CONFIG', raising=False)
    settings = load_config()
    assert DEFAULT_CONFIG_PATH.exists()
    assert settings.search.grad_tol == 1e-8
    assert settings.identities.n_range == (2, 5)
    assert settings.tolerances.conjecture_margin == 1e-6


def test_partial_file_keeps_defaults(tmp_path):
    """Partial file keeps defaults."""
    path = tmp_path / 'c.yaml'
    path.write_text(yaml.safe_dump({'search': {'restarts': 3}}))
    settings = load_config(str(path))
    assert settings.search.restarts == 3
    assert settings.search.max_iters == ToolkitSettings().search.max_iters


@pytest.mark.parametrize('content', [
    {'search': {'restarts': 0}},
    {'search': {'unknown': 1}},
    {'lemmas': {'n_range': [4, 2]}},
    {'identities': {'n_range': [0, 2]}},
])
def test_invalid_files_raise(tmp_path, content):
    """Invalid files raise."""
    path = tmp_path / 'bad.yaml'
    path.write_text(yaml.safe_dump(content))
    with pytest.raises(ConfigError):
        load_config(str(path))


def test_missing_file_raises(tmp_path):
    """Missing file raises."""
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / 'nope.yaml'))


def test_config_path_from_environment(tmp_path, monkeypatch):
    """Config path from environment."""
    path = tmp_path / 'env.yaml'
    path.write_text(yaml.safe_dump({'search': {'seed': 42}}))
    monkeypatch.setenv('DDVV_CONFIG', str(path))
    assert load_config().search.seed == 42


def test_seed_resolution(monkeypatch):
    """Seed resolution."""
    settings = ToolkitSettings()
    monkeypatch.delenv('DDVV_SEED', raising=False)
    assert resolve_seed(None, settings) == settings.search.seed
    monkeypatch.setenv('DDVV_SEED', '17')
    assert resolve_seed(None, settings) == 17
    assert resolve_seed(3, settings) == 3
    monkeypatch.setenv('DDVV_SEED', 'abc')
    with pytest.raises(ConfigError):
        resolve_seed(None, settings)
