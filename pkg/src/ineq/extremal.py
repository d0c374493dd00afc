"""Tuples attaining equality in the DDVV-type inequalities.

The building blocks are the Pauli-type matrices

    H_1 = lam * diag(1, -1),  H_2 = lam * [[0, 1], [1, 0]],  H_3 = lam * [[0, -i], [i, 0]]

embedded in the top-left 2x2 block of an ``n x n`` zero matrix.
"""
import logging
from typing import Tuple

import numpy as np

from src.basis.bases import BasisRotation
from src.exterior.gram import tuple_coefficients
from src.matcore.matrices import MatrixClass, MatrixTuple
from src.utils.exceptions import UnsupportedCaseError

logger = logging.getLogger(__name__)

_SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
_SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)


def pauli_triple(lam: float = 1.0) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(H_1, H_2, H_3)``: traceless, pairwise anticommuting, each of norm ``2 lam^2``."""
    return lam * _SIGMA_Z, lam * _SIGMA_X, lam * _SIGMA_Y


def _embed(block: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=np.complex128)
    out[:2, :2] = block
    return out


def _padded(matrix_class: MatrixClass, blocks, m: int, n: int) -> MatrixTuple:
    mats = np.zeros((m, n, n), dtype=np.complex128)
    for r, block in enumerate(blocks):
        mats[r] = _embed(block, n)
    return MatrixTuple(matrix_class, mats)


def extremal_tuple(matrix_class: MatrixClass, m: int, n: int, lam: float = 1.0, theta: float = 0.0) -> MatrixTuple:
    """Build an equality tuple for ``(matrix_class, m, n)``.

    Hermitian and complex tuples use ``H_1, H_2, H_3`` for ``m >= 3`` and
    ``(H_1, cos(theta) H_2 + sin(theta) H_3)`` for ``m == 2``; skew-Hermitian
    tuples are the same times ``i``. Symmetric tuples use the real pair
    ``(H_1, H_2)``; general real tuples add ``i H_3`` as the third member.
    Remaining members are zero.

    Args:
        matrix_class: Class of the tuple
        m: Tuple length, at least 2
        n: Matrix side, at least 2
        lam: Nonnegative scale
        theta: Rotation parameter of the ``m == 2`` Hermitian family

    Returns:
        The equality tuple

    Raises:
        UnsupportedCaseError: if no equality tuple is known for the request
    """
    matrix_class = MatrixClass(matrix_class)
    if n < 2:
        raise UnsupportedCaseError(f"extremal tuples need n >= 2, got n={n}")
    if m < 2:
        raise UnsupportedCaseError(f"extremal tuples need m >= 2, got m={m}")
    if lam < 0:
        raise UnsupportedCaseError(f"lambda must be nonnegative, got {lam}")

    h1, h2, h3 = pauli_triple(lam)
    if matrix_class in (MatrixClass.HERMITIAN, MatrixClass.SKEW_HERMITIAN, MatrixClass.GENERAL_COMPLEX):
        if m >= 3:
            blocks = [h1, h2, h3]
        else:
            blocks = [h1, np.cos(theta) * h2 + np.sin(theta) * h3]
        if matrix_class is MatrixClass.SKEW_HERMITIAN:
            blocks = [1j * b for b in blocks]
    elif matrix_class is MatrixClass.SYMMETRIC:
        blocks = [h1, h2]
    elif matrix_class is MatrixClass.GENERAL_REAL:
        blocks = [h1, h2] if m == 2 else [h1, h2, 1j * h3]
    else:
        raise UnsupportedCaseError(f"no equality tuple known for class {matrix_class.value}")

    logger.debug(f"Extremal tuple {matrix_class.value} m={m} n={n} lambda={lam} theta={theta}")
    return _padded(matrix_class, blocks, m, n)


def equality_rotation(n: int) -> BasisRotation:
    """``Q in SO(n^2)`` whose first three columns are the coefficients of the unit-norm triple.

    At ``x = (1/3, 1/3, 1/3, 0, ...)`` the quadratic form of this rotation vanishes.
    """
    unit = extremal_tuple(MatrixClass.HERMITIAN, 3, n, lam=1.0 / np.sqrt(2.0))
    leading = tuple_coefficients(unit)
    size = n * n
    q, _ = np.linalg.qr(np.column_stack([leading, np.eye(size)]))
    q = q[:, :size].copy()
    q[:, :3] = leading
    return BasisRotation(q).special()
