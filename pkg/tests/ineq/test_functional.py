"""Tests for the DDVV functional, f_Q and the Boettcher-Wenzel residual."""
import numpy as np
import pytest

from src.basis.bases import BasisRotation
from src.exterior.gram import spectral_frame, tuple_coefficients
from src.ineq.extremal import extremal_tuple, pauli_triple
from src.ineq.functional import FOUR_THIRDS, QuadraticForm, bw_check, evaluate, f_q
from src.matcore.matrices import MatrixClass, MatrixTuple, norm_sq
from src.matcore.sampling import rng_stream, sample_class, sample_orthogonal, sample_tuple
from src.optim.simplex import project_to_interior
from src.utils.exceptions import DimensionError


def test_single_matrix_has_zero_ratio(rng):
    """Single matrix has zero ratio."""
    ev = evaluate(sample_tuple(MatrixClass.HERMITIAN, 1, 3, rng))
    assert ev.lhs == 0.0 and ev.ratio == 0.0


def test_zero_tuple_has_zero_ratio():
    """Zero tuple has zero ratio."""
    ev = evaluate(MatrixTuple.zeros(MatrixClass.HERMITIAN, 3, 2))
    assert (ev.lhs, ev.energy, ev.ratio) == (0.0, 0.0, 0.0)


def test_symmetric_pair_values():
    """Symmetric pair values."""
    ev = evaluate(extremal_tuple(MatrixClass.SYMMETRIC, 2, 3))
    assert ev.lhs == pytest.approx(16.0)
    assert ev.energy == pytest.approx(4.0)
    assert ev.ratio == pytest.approx(1.0)


def test_pauli_triple_values():
    """Pauli triple values."""
    ev = evaluate(extremal_tuple(MatrixClass.HERMITIAN, 3, 2))
    assert ev.lhs == pytest.approx(48.0)
    assert ev.energy == pytest.approx(6.0)
    assert ev.ratio == pytest.approx(4.0 / 3.0, rel=1e-12)


def test_ratio_is_scale_invariant(rng):
    """Ratio is scale invariant."""
    tup = sample_tuple(MatrixClass.GENERAL_COMPLEX, 3, 3, rng)
    assert evaluate(tup.scaled(7.5)).ratio == pytest.approx(evaluate(tup).ratio, rel=1e-10)


def test_hermitian_and_skew_hermitian_agree_exactly(rng):
    """Hermitian and skew hermitian agree exactly."""
    tup = sample_tuple(MatrixClass.HERMITIAN, 3, 3, rng)
    a, b = evaluate(tup), evaluate(tup.multiplied_by_i())
    assert a.energy == b.energy
    assert a.lhs == pytest.approx(b.lhs, rel=1e-15)


def test_f_q_at_a_vertex():
    """F q at a vertex."""
    rotation = BasisRotation.identity(4)
    assert f_q(np.eye(4)[0], rotation, 2) == pytest.approx(-FOUR_THIRDS)


def test_f_q_checks_lengths():
    """F q checks lengths."""
    with pytest.raises(DimensionError):
        f_q(np.ones(3), BasisRotation.identity(4), 2)
    with pytest.raises(DimensionError):
        QuadraticForm(BasisRotation.identity(9), 2)


def test_f_q_is_homogeneous(rng):
    """F q is homogeneous."""
    form = QuadraticForm(BasisRotation(sample_orthogonal(9, rng)), 3)
    x = rng.random(9)
    assert form.value(2.5 * x) == pytest.approx(6.25 * form.value(x), rel=1e-10)


@pytest.mark.parametrize('n', [2, 3])
def test_f_q_on_interior_of_identity_rotation(n):
    """F q on interior of identity rotation."""
    form = QuadraticForm(BasisRotation.identity(n * n), n)
    for t in range(200):
        x = project_to_interior(rng_stream(9, t).dirichlet(np.ones(n * n)), 0.01)
        assert form.value(x) < -1.0 / 3.0


def test_reduction_to_the_quadratic_form(rng):
    """Reduction to the quadratic form."""
    for _ in range(20):
        tup = sample_tuple(MatrixClass.HERMITIAN, 3, 3, rng)
        ev = evaluate(tup)
        x, rotation = spectral_frame(tuple_coefficients(tup))
        expected = ev.lhs - FOUR_THIRDS * ev.energy ** 2
        assert f_q(x, rotation, 3) == pytest.approx(expected, rel=1e-8, abs=1e-8 * ev.energy ** 2)


def test_bw_residual_is_nonnegative(rng):
    """Bw residual is nonnegative."""
    for n in range(1, 7):
        for _ in range(50):
            x = sample_class(MatrixClass.GENERAL_COMPLEX, n, rng)
            y = sample_class(MatrixClass.GENERAL_COMPLEX, n, rng)
            assert bw_check(x, y) >= -1e-10 * (1 + norm_sq(x) * norm_sq(y))


def test_bw_residual_special_cases(rng):
    """Bw residual special cases."""
    x = sample_class(MatrixClass.GENERAL_COMPLEX, 4, rng)
    assert bw_check(x, x) == pytest.approx(2 * norm_sq(x) ** 2)
    h1, h2, _ = pauli_triple(1.0)
    assert abs(bw_check(h1, h2)) <= 1e-12
    with pytest.raises(DimensionError):
        bw_check(np.eye(2), np.eye(3))
