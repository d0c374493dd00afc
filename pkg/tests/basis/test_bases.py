"""Tests for the index order, the class bases and basis rotations."""
import numpy as np
import pytest

from src.basis.bases import BasisRotation, class_basis, hermitian_basis, rotate_basis, rotated_entry
from src.basis.index import flat_index, index_pair, pair_table
from src.matcore.matrices import MatrixClass, MatrixTuple, is_member
from src.matcore.sampling import sample_class, sample_orthogonal
from src.utils.exceptions import DimensionError

SQRT2 = np.sqrt(2.0)


@pytest.mark.parametrize('n', [1, 2, 3, 5])
def test_flat_index_is_a_bijection(n):
    """Flat index is a bijection."""
    alphas = [flat_index((i, j), n) for i in range(1, n + 1) for j in range(1, n + 1)]
    assert alphas == list(range(1, n * n + 1))
    assert all(flat_index(index_pair(a, n), n) == a for a in alphas)


def test_index_bounds():
    """Test flat index bounds."""
    with pytest.raises(DimensionError):
        flat_index((0, 1), 2)
    with pytest.raises(DimensionError):
        index_pair(5, 2)


def test_pair_table_order():
    """Pair table order."""
    assert pair_table(3).tolist() == [[0, 1], [0, 2], [1, 2]]
    assert pair_table(1).shape == (0, 2)


def test_hermitian_basis_one_by_one():
    """Hermitian basis one by one."""
    basis = hermitian_basis(1)
    assert np.array_equal(basis.elements, np.ones((1, 1, 1)))


def test_hermitian_basis_lower_element():
    """Hermitian basis lower element."""
    # alpha = 3 is (2, 1): i(E_21 - E_12)/sqrt2
    element = hermitian_basis(2).elements[2]
    expected = np.array([[0, -1j], [1j, 0]]) / SQRT2
    assert np.allclose(element, expected)


@pytest.mark.parametrize('matrix_class', list(MatrixClass))
@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_class_basis_is_orthonormal_and_complete(matrix_class, n, rng):
    """Class basis is orthonormal and complete."""
    basis = class_basis(matrix_class, n)
    assert len(basis) == matrix_class.dimension(n)
    assert np.allclose(basis.gram(), np.eye(len(basis)), atol=1e-12)
    assert all(is_member(e, matrix_class) for e in basis.elements)
    a = sample_class(matrix_class, n, rng)[None]
    coeffs = basis.coefficients(a)
    assert np.allclose(basis.combine(coeffs), a, atol=1e-12)


def test_small_class_bases():
    """Small class bases."""
    skew = class_basis(MatrixClass.SKEW_SYMMETRIC, 2)
    assert len(skew) == 1
    assert np.allclose(skew.elements[0], np.array([[0, 1], [-1, 0]]) / SQRT2)
    assert len(class_basis(MatrixClass.GENERAL_COMPLEX, 2)) == 8


def test_rotation_validation_and_orientation(rng):
    """Rotation validation and orientation."""
    with pytest.raises(DimensionError):
        BasisRotation(np.ones((2, 2)))
    q = sample_orthogonal(4, rng)
    q[:, 0] *= np.sign(np.linalg.det(q)) * -1
    assert np.linalg.det(BasisRotation(q).special().Q) == pytest.approx(1.0)


def test_rotated_basis_stays_orthonormal_and_hermitian(rng):
    """Rotated basis stays orthonormal and hermitian."""
    rotation = BasisRotation(sample_orthogonal(9, rng))
    rotated = rotate_basis(hermitian_basis(3), rotation)
    assert np.allclose(rotated.gram(), np.eye(9), atol=1e-12)
    MatrixTuple(MatrixClass.HERMITIAN, rotated.elements)


@pytest.mark.parametrize('n', [2, 3])
def test_rotated_entry_closed_form(n, rng):
    """Rotated entry closed form."""
    rotation = BasisRotation(sample_orthogonal(n * n, rng))
    rotated = rotate_basis(hermitian_basis(n), rotation).elements
    for alpha in range(1, n * n + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert rotated_entry(rotation, alpha, i, j, n) == pytest.approx(rotated[alpha - 1, i - 1, j - 1])
