import logging

import pytest

from positroids import config
from positroids.core import utils

_CONFIG_KEYS = [key for key in vars(config) if not key.startswith("_")]


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Every test starts from the packaged defaults and a private ~/.positroids.yaml."""
    saved = {key: getattr(config, key) for key in _CONFIG_KEYS}
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    monkeypatch.setattr(utils, "CONFIG_PATH", str(tmp_path / "positroids.yaml"))
    yield
    for key, value in saved.items():
        setattr(config, key, value)
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def run_config():
    return utils.RunConfig(seed=7, sample_count=3, n_max=4)
