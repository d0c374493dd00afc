"""Shared pytest fixtures."""
import numpy as np
import pytest

from src.matcore.matrices import MatrixClass
from src.utils.config import IdentitySettings, LemmaSettings, SearchSettings, SimplexSettings, ToolkitSettings

ALL_CLASSES = list(MatrixClass)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def small_search():
    """Budgets small enough for unit tests, large enough to converge on 2x2 and 3x3 cases."""
    return SearchSettings(restarts=8, max_iters=1000, seed=7)


@pytest.fixture
def small_simplex():
    return SimplexSettings(restarts=8, max_iters=3000)


@pytest.fixture
def small_settings(small_search, small_simplex):
    return ToolkitSettings(
        search=small_search,
        simplex=small_simplex,
        lemmas=LemmaSettings(trials=50, n_range=(2, 3)),
        identities=IdentitySettings(n_range=(2, 3), phi_pairs=50, chain_tuples=20),
    )


@pytest.fixture(autouse=True)
def reset_package_logging():
    """Undo ``setup_logging`` so later tests see module records through caplog."""
    yield
    import logging
    for name in ('ddvv', 'src'):
        logger = logging.getLogger(name)
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()
        logger.handlers = []
        logger.propagate = True
        logger.setLevel(logging.NOTSET)
