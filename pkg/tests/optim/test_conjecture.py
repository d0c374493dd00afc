"""Tests for the 4/3 conjecture probe."""
import logging

import pytest

from src.matcore.matrices import MatrixClass
from src.optim.conjecture import explore_conjecture
from src.utils.exceptions import ConfigError


def test_probe_stays_at_four_thirds(small_search):
    """Probe stays at four thirds."""
    search = small_search.model_copy(update={'restarts': 4, 'max_iters': 300})
    probe = explore_conjecture(3, 2, search)
    assert set(probe.reports) == {MatrixClass.GENERAL_COMPLEX, MatrixClass.GENERAL_REAL}
    for report in probe.reports.values():
        assert 4 / 3 - 1e-9 <= report.best_ratio <= 4 / 3 + 1e-6
    assert not probe.counterexample


def test_negative_margin_flags_a_candidate(small_search, caplog):
    """Negative margin flags a candidate."""
    search = small_search.model_copy(update={'restarts': 1, 'max_iters': 10})
    with caplog.at_level(logging.WARNING, logger='src.optim.conjecture'):
        probe = explore_conjecture(3, 2, search, margin=-0.1, classes=[MatrixClass.GENERAL_COMPLEX])
    assert probe.counterexample
    assert 'Counterexample candidate' in caplog.text
    assert '"matrices"' in caplog.text


def test_needs_three_matrices(small_search):
    """The conjecture search needs at least three matrices."""
    with pytest.raises(ConfigError):
        explore_conjecture(2, 2, small_search)
