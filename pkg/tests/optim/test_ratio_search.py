"""Tests for the ratio gradient and the multi-start search."""
import numpy as np
import pytest

from src.ineq.extremal import extremal_tuple
from src.ineq.functional import evaluate
from src.matcore.matrices import MatrixClass, MatrixTuple, inner
from src.matcore.sampling import rng_stream, sample_tuple
from src.optim.ratio_search import SearchConfig, check_gradient, maximize_ratio, ratio_gradient
from src.utils.config import SearchSettings
from src.utils.exceptions import ConfigError, ZeroEnergyError


@pytest.mark.parametrize('matrix_class', list(MatrixClass))
def test_gradient_matches_finite_differences(matrix_class):
    """Gradient matches finite differences."""
    tup = sample_tuple(matrix_class, 3, 3, rng_stream(12, list(MatrixClass).index(matrix_class)))
    check = check_gradient(tup)
    assert check.passed, check


def test_gradient_is_tangent_to_the_sphere(rng):
    """Gradient is tangent to the sphere."""
    tup = sample_tuple(MatrixClass.GENERAL_COMPLEX, 3, 3, rng)
    grad = ratio_gradient(tup)
    radial = sum(inner(g, b) for g, b in zip(grad, tup.matrices))
    assert abs(radial) <= 1e-10 * np.linalg.norm(grad) * np.sqrt(evaluate(tup).energy)


def test_gradient_vanishes_at_the_pauli_triple():
    """Gradient vanishes at the pauli triple."""
    assert np.linalg.norm(ratio_gradient(extremal_tuple(MatrixClass.HERMITIAN, 3, 2))) <= 1e-6


def test_gradient_needs_energy():
    """Gradient needs energy."""
    with pytest.raises(ZeroEnergyError):
        ratio_gradient(MatrixTuple.zeros(MatrixClass.HERMITIAN, 2, 2))


def test_config_validation():
    """Config validation."""
    with pytest.raises(ConfigError):
        SearchConfig.build(SearchSettings(), matrix_class='hermitian', m=3, n=2, step_shrink=1.5)
    with pytest.raises(ConfigError):
        SearchConfig.build(None, matrix_class='no-such-class', m=3, n=2)
    cfg = SearchConfig.build(SearchSettings(restarts=4), matrix_class='hermitian', m=3, n=2, restarts=None)
    assert cfg.restarts == 4 and cfg.matrix_class is MatrixClass.HERMITIAN


@pytest.mark.parametrize('matrix_class, m, n, c', [
    (MatrixClass.HERMITIAN, 3, 2, 4 / 3),
    (MatrixClass.HERMITIAN, 2, 3, 1.0),
    (MatrixClass.SKEW_SYMMETRIC, 2, 3, 0.25),
    (MatrixClass.SKEW_SYMMETRIC, 3, 3, 1 / 3),
    (MatrixClass.SYMMETRIC, 2, 2, 1.0),
])
def test_search_reaches_known_constants(matrix_class, m, n, c, small_search):
    """Search reaches known constants."""
    cfg = SearchConfig.build(small_search, matrix_class=matrix_class, m=m, n=n)
    report = maximize_ratio(cfg)
    assert c - 1e-3 <= report.best_ratio <= c + 1e-8
    assert report.best_ratio == pytest.approx(evaluate(report.best_tuple).ratio, abs=1e-12)
    assert report.best_ratio >= max(report.restart_ratios) - 1e-12
    assert report.gradient_check.passed


def test_search_is_monotone_per_restart(small_search):
    """Search is monotone per restart."""
    cfg = SearchConfig.build(small_search, matrix_class=MatrixClass.GENERAL_COMPLEX, m=3, n=2, max_iters=200)
    frame = maximize_ratio(cfg).trace_frame()
    for _, group in frame.groupby('restart'):
        assert np.all(np.diff(group['ratio'].to_numpy()) > 0)


def test_search_does_not_depend_on_threads(small_search):
    """Search does not depend on threads."""
    base = dict(matrix_class=MatrixClass.HERMITIAN, m=3, n=3, max_iters=100, restarts=6)
    one = maximize_ratio(SearchConfig.build(small_search, threads=1, **base))
    three = maximize_ratio(SearchConfig.build(small_search, threads=3, **base))
    assert one.restart_ratios == three.restart_ratios
    assert np.array_equal(one.best_tuple.matrices, three.best_tuple.matrices)


def test_single_matrix_and_zero_start(small_search):
    """Single matrix and zero start."""
    single = maximize_ratio(SearchConfig.build(small_search, matrix_class='hermitian', m=1, n=3, restarts=2))
    assert single.best_ratio == 0.0 and single.gradient_check is None

    cfg = SearchConfig.build(small_search, matrix_class='complex', m=3, n=2, restarts=2, max_iters=50)
    report = maximize_ratio(cfg, starts=[MatrixTuple.zeros(MatrixClass.GENERAL_COMPLEX, 3, 2)])
    assert report.restart_ratios[0] == 0.0
    assert report.iterations[0] == 0
    assert report.best_restart == 1
