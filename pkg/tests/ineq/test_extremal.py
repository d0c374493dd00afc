"""Tests for the equality tuple constructors."""
import numpy as np
import pytest

from src.ineq.extremal import equality_rotation, extremal_tuple, pauli_triple
from src.ineq.functional import QuadraticForm, evaluate
from src.matcore.matrices import MatrixClass
from src.utils.exceptions import UnsupportedCaseError


def test_pauli_triple_anticommutes():
    """Pauli triple anticommutes."""
    h = pauli_triple(1.0)
    for a in range(3):
        assert np.trace(h[a]) == 0
        for b in range(a + 1, 3):
            assert np.allclose(h[a] @ h[b] + h[b] @ h[a], 0)


@pytest.mark.parametrize('n', [2, 3, 5])
def test_hermitian_triple_reaches_four_thirds(n):
    """Hermitian triple reaches four thirds."""
    assert evaluate(extremal_tuple(MatrixClass.HERMITIAN, 3, n)).ratio == pytest.approx(4 / 3, rel=1e-12)


def test_padding_with_zero_matrices():
    """Padding with zero matrices."""
    tup = extremal_tuple(MatrixClass.HERMITIAN, 5, 4)
    assert np.array_equal(tup.matrices[3:], np.zeros((2, 4, 4)))
    assert np.array_equal(tup.matrices[0, 2:, :], np.zeros((2, 4)))
    assert evaluate(tup).ratio == pytest.approx(4 / 3, rel=1e-12)


@pytest.mark.parametrize('theta', [0.0, np.pi / 4, np.pi / 3, np.pi / 2])
def test_hermitian_pair_family_reaches_one(theta):
    """Hermitian pair family reaches one."""
    assert evaluate(extremal_tuple(MatrixClass.HERMITIAN, 2, 3, theta=theta)).ratio == pytest.approx(1.0, rel=1e-12)


@pytest.mark.parametrize('matrix_class, m, c', [
    (MatrixClass.SKEW_HERMITIAN, 3, 4 / 3),
    (MatrixClass.SKEW_HERMITIAN, 2, 1.0),
    (MatrixClass.SYMMETRIC, 2, 1.0),
    (MatrixClass.SYMMETRIC, 4, 1.0),
    (MatrixClass.GENERAL_REAL, 3, 4 / 3),
    (MatrixClass.GENERAL_REAL, 2, 1.0),
    (MatrixClass.GENERAL_COMPLEX, 3, 4 / 3),
])
def test_other_classes(matrix_class, m, c):
    """Other classes."""
    tup = extremal_tuple(matrix_class, m, 5, lam=2.0)
    assert tup.matrix_class is matrix_class
    assert evaluate(tup).ratio == pytest.approx(c, rel=1e-12)


def test_zero_scale_gives_zero_tuple():
    """Zero scale gives zero tuple."""
    tup = extremal_tuple(MatrixClass.HERMITIAN, 3, 2, lam=0.0)
    assert evaluate(tup).ratio == 0.0


@pytest.mark.parametrize('args', [
    (MatrixClass.SKEW_SYMMETRIC, 3, 3),
    (MatrixClass.HERMITIAN, 1, 3),
    (MatrixClass.HERMITIAN, 3, 1),
])
def test_unsupported_requests(args):
    """Unsupported requests."""
    with pytest.raises(UnsupportedCaseError):
        extremal_tuple(*args)


def test_negative_scale_is_rejected():
    """Negative scale is rejected."""
    with pytest.raises(UnsupportedCaseError):
        extremal_tuple(MatrixClass.HERMITIAN, 3, 2, lam=-1.0)


@pytest.mark.parametrize('n', [2, 3])
def test_equality_rotation_vanishes_at_the_triple(n):
    """Equality rotation vanishes at the triple."""
    rotation = equality_rotation(n)
    assert np.linalg.det(rotation.Q) == pytest.approx(1.0)
    x = np.zeros(n * n)
    x[:3] = 1.0 / 3.0
    assert abs(QuadraticForm(rotation, n).value(x)) <= 1e-9
