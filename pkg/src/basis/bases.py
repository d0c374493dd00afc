"""Real orthonormal bases of the matrix classes and basis change by ``Q in O(N)``."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from src.basis.index import IndexPair, flat_index
from src.matcore.matrices import TAU_ORTH, MatrixClass
from src.utils.exceptions import DimensionError, UnsupportedCaseError

logger = logging.getLogger(__name__)

SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class BasisSet:
    """Ordered real-orthonormal basis of a matrix class.

    ``labels[k]`` is the index pair the k-th element was built from; for the
    general complex class the second half repeats the labels of the first.
    """

    matrix_class: MatrixClass
    n: int
    elements: np.ndarray
    labels: Tuple[IndexPair, ...]

    def __post_init__(self):
        elements = np.array(self.elements, dtype=np.complex128).reshape(-1, self.n, self.n)
        elements.setflags(write=False)
        object.__setattr__(self, 'elements', elements)

    def __len__(self) -> int:
        return self.elements.shape[0]

    def gram(self) -> np.ndarray:
        """Real Gram matrix ``<e_a, e_b>`` of the basis."""
        flat = self.elements.reshape(len(self), self.n * self.n)
        return (flat @ flat.conj().T).real

    def coefficients(self, mats: np.ndarray) -> np.ndarray:
        """Coefficients ``<B_r, e_alpha>`` of a stack ``(m, n, n)`` as an ``(N, m)`` array."""
        return np.einsum('rxy,axy->ar', mats, self.elements.conj()).real

    def combine(self, coeffs: np.ndarray) -> np.ndarray:
        """Inverse of :meth:`coefficients` on the class: ``sum_alpha c[alpha, r] e_alpha``."""
        return np.einsum('ar,axy->rxy', coeffs, self.elements)


@lru_cache(maxsize=None)
def hermitian_basis(n: int) -> BasisSet:
    """The basis ``E_ii``, ``(E_ij + E_ji)/sqrt2`` (i<j), ``i(E_ij - E_ji)/sqrt2`` (i>j).

    Elements are listed in flat-index order.
    """
    if n < 1:
        raise DimensionError(f"n must be >= 1, got {n}")
    elements = np.zeros((n * n, n, n), dtype=np.complex128)
    labels = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            alpha = flat_index((i, j), n) - 1
            e = elements[alpha]
            if i == j:
                e[i - 1, i - 1] = 1.0
            elif i < j:
                e[i - 1, j - 1] = e[j - 1, i - 1] = 1.0 / SQRT2
            else:
                e[i - 1, j - 1] = 1j / SQRT2
                e[j - 1, i - 1] = -1j / SQRT2
            labels.append(IndexPair(i, j))
    return BasisSet(MatrixClass.HERMITIAN, n, elements, tuple(labels))


@lru_cache(maxsize=None)
def class_basis(matrix_class: MatrixClass, n: int) -> BasisSet:
    """Orthonormal basis of ``matrix_class`` built from the Hermitian generators."""
    matrix_class = MatrixClass(matrix_class)
    herm = hermitian_basis(n)
    upper = [k for k, (i, j) in enumerate(herm.labels) if i <= j]

    if matrix_class is MatrixClass.HERMITIAN:
        return herm
    if matrix_class is MatrixClass.SKEW_HERMITIAN:
        return BasisSet(matrix_class, n, 1j * herm.elements, herm.labels)
    if matrix_class is MatrixClass.SYMMETRIC:
        return BasisSet(matrix_class, n, herm.elements[upper], tuple(herm.labels[k] for k in upper))
    if matrix_class is MatrixClass.SKEW_SYMMETRIC:
        # (E_ij - E_ji)/sqrt2 for i < j, the real form of the i > j generators
        elements, labels = [], []
        for k, (i, j) in enumerate(herm.labels):
            if i < j:
                lower = flat_index((j, i), n) - 1
                elements.append(1j * herm.elements[lower])
                labels.append(IndexPair(i, j))
        return BasisSet(matrix_class, n, np.array(elements).reshape(-1, n, n), tuple(labels))
    if matrix_class is MatrixClass.GENERAL_REAL:
        elements = herm.elements.copy()
        lower = [k for k, (i, j) in enumerate(herm.labels) if i > j]
        elements[lower] *= -1j
        return BasisSet(matrix_class, n, elements, herm.labels)
    if matrix_class is MatrixClass.GENERAL_COMPLEX:
        return BasisSet(
            matrix_class, n,
            np.concatenate([herm.elements, 1j * herm.elements]),
            herm.labels + herm.labels,
        )
    raise UnsupportedCaseError(f"no basis for class {matrix_class}")


@dataclass(frozen=True, eq=False)
class BasisRotation:
    """Orthogonal ``Q`` with ``(Q_1, ..., Q_N) = (E_1, ..., E_N) Q``."""

    Q: np.ndarray

    def __post_init__(self):
        Q = np.array(self.Q, dtype=np.float64)
        if Q.ndim != 2 or Q.shape[0] != Q.shape[1]:
            raise DimensionError(f"Q must be square, got shape {Q.shape}")
        if np.linalg.norm(Q.T @ Q - np.eye(Q.shape[0])) > TAU_ORTH:
            raise DimensionError("Q is not orthogonal")
        Q.setflags(write=False)
        object.__setattr__(self, 'Q', Q)

    @classmethod
    def identity(cls, size: int) -> 'BasisRotation':
        """Identity rotation of side ``size``."""
        return cls(np.eye(size))

    @property
    def size(self) -> int:
        """Side ``N`` of the rotation."""
        return self.Q.shape[0]

    def special(self) -> 'BasisRotation':
        """Same rotation moved into ``SO(N)`` by flipping the last column if needed.

        Column signs do not change any commutator norm of the rotated basis.
        """
        if np.linalg.det(self.Q) > 0:
            return self
        Q = self.Q.copy()
        Q[:, -1] *= -1
        return BasisRotation(Q)


def rotate_basis(basis: BasisSet, rotation: BasisRotation) -> BasisSet:
    """Return ``(Q_1, ..., Q_N)`` with ``Q_alpha = sum_beta q[beta, alpha] E_beta``."""
    if rotation.size != len(basis):
        raise DimensionError(f"Q has side {rotation.size}, basis has {len(basis)} elements")
    elements = np.einsum('ba,bxy->axy', rotation.Q, basis.elements)
    return BasisSet(basis.matrix_class, basis.n, elements, basis.labels)


def rotated_entry(rotation: BasisRotation, alpha: int, i: int, j: int, n: int) -> complex:
    """Entry ``(i, j)`` of the rotated Hermitian basis element ``Q_alpha`` in closed form."""
    if rotation.size != n * n:
        raise DimensionError(f"Q has side {rotation.size}, expected {n * n}")
    q = rotation.Q
    gamma = flat_index((i, j), n) - 1
    tau = flat_index((j, i), n) - 1
    col = alpha - 1
    if i == j:
        return complex(q[gamma, col])
    if i < j:
        return complex(q[gamma, col] - 1j * q[tau, col]) / SQRT2
    return complex(q[tau, col] + 1j * q[gamma, col]) / SQRT2
