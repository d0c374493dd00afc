"""Dense complex matrices, structured matrix classes and matrix tuples.

All matrices are ``numpy`` arrays of dtype ``complex128``. The real inner
product used throughout is ``<A, B> = Re tr(A B*)``, under which every matrix
class below is a real-linear subspace with an orthogonal projection.
"""
import enum
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from src.utils.exceptions import (
    ClassMembershipError,
    DimensionError,
    InvalidMatrixError,
)

logger = logging.getLogger(__name__)

TAU_ORTH = 1e-10

ArrayLike = Union[np.ndarray, Sequence]


def membership_tolerance(n: int) -> float:
    """Absolute class-membership tolerance for side length ``n``."""
    return 1e-12 * max(n, 1)


class MatrixClass(str, enum.Enum):
    """The six structured classes a DDVV tuple can be drawn from."""

    SYMMETRIC = 'symmetric'
    SKEW_SYMMETRIC = 'skew-symmetric'
    HERMITIAN = 'hermitian'
    SKEW_HERMITIAN = 'skew-hermitian'
    GENERAL_COMPLEX = 'complex'
    GENERAL_REAL = 'real'

    @property
    def is_real(self) -> bool:
        """Whether every member of the class is a real matrix."""
        return self in (MatrixClass.SYMMETRIC, MatrixClass.SKEW_SYMMETRIC, MatrixClass.GENERAL_REAL)

    def dimension(self, n: int) -> int:
        """Real dimension of the class on ``n x n`` matrices."""
        if self is MatrixClass.SYMMETRIC:
            return n * (n + 1) // 2
        if self is MatrixClass.SKEW_SYMMETRIC:
            return n * (n - 1) // 2
        if self is MatrixClass.GENERAL_COMPLEX:
            return 2 * n * n
        return n * n


def as_matrix(a: ArrayLike) -> np.ndarray:
    """Coerce ``a`` to a finite square complex matrix."""
    mat = np.asarray(a, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] == 0:
        raise InvalidMatrixError(f"expected a non-empty square matrix, got shape {mat.shape}")
    if not np.all(np.isfinite(mat)):
        raise InvalidMatrixError("matrix has NaN or infinite entries")
    return mat


def _check_same_side(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"side mismatch: {a.shape} vs {b.shape}")


def commutator(a: ArrayLike, b: ArrayLike) -> np.ndarray:
    """Return ``AB - BA``."""
    a = as_matrix(a)
    b = as_matrix(b)
    _check_same_side(a, b)
    return a @ b - b @ a


def inner(a: ArrayLike, b: ArrayLike) -> float:
    """Frobenius inner product ``Re tr(A B*)``."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    _check_same_side(a, b)
    return float(np.vdot(b, a).real)


def norm_sq(a: ArrayLike) -> float:
    """Squared Frobenius norm ``tr(A A*)``."""
    a = np.asarray(a, dtype=np.complex128)
    return float(np.vdot(a, a).real)


def project(a: ArrayLike, matrix_class: MatrixClass) -> np.ndarray:
    """Orthogonal projection onto ``matrix_class``.

    Works on a single matrix or on a stack of shape ``(..., n, n)``.
    """
    a = np.asarray(a, dtype=np.complex128)
    if matrix_class is MatrixClass.GENERAL_COMPLEX:
        return a.copy()
    if matrix_class is MatrixClass.HERMITIAN:
        return (a + np.conj(np.swapaxes(a, -1, -2))) / 2
    if matrix_class is MatrixClass.SKEW_HERMITIAN:
        return (a - np.conj(np.swapaxes(a, -1, -2))) / 2

    real = a.real
    if matrix_class is MatrixClass.SYMMETRIC:
        real = (real + np.swapaxes(real, -1, -2)) / 2
    elif matrix_class is MatrixClass.SKEW_SYMMETRIC:
        real = (real - np.swapaxes(real, -1, -2)) / 2
    return real.astype(np.complex128)


def is_member(a: ArrayLike, matrix_class: MatrixClass, tol: Optional[float] = None) -> bool:
    """Membership predicate, scaled by ``max(1, ||A||)``."""
    a = np.asarray(a, dtype=np.complex128)
    if tol is None:
        tol = membership_tolerance(a.shape[-1])
    deviation = np.sqrt(norm_sq(a - project(a, matrix_class)))
    return deviation <= tol * max(1.0, np.sqrt(norm_sq(a)))


@dataclass(frozen=True, eq=False)
class MatrixTuple:
    """Ordered tuple ``(B_1, ..., B_m)`` of same-class ``n x n`` matrices.

    The stacked array is copied on construction and frozen.
    """

    matrix_class: MatrixClass
    matrices: np.ndarray

    def __post_init__(self):
        try:
            mats = np.array(self.matrices, dtype=np.complex128)
        except ValueError as e:
            raise DimensionError(f"members do not share a side length: {e}") from e
        if mats.ndim != 3 or mats.shape[0] == 0 or mats.shape[1] != mats.shape[2] or mats.shape[1] == 0:
            raise DimensionError(f"expected shape (m, n, n) with m, n >= 1, got {mats.shape}")
        if not np.all(np.isfinite(mats)):
            raise InvalidMatrixError("tuple has NaN or infinite entries")
        cls = MatrixClass(self.matrix_class)
        for r, mat in enumerate(mats):
            if not is_member(mat, cls):
                raise ClassMembershipError(f"member {r + 1} is not in class {cls.value}")
        mats.setflags(write=False)
        object.__setattr__(self, 'matrix_class', cls)
        object.__setattr__(self, 'matrices', mats)

    @classmethod
    def zeros(cls, matrix_class: MatrixClass, m: int, n: int) -> 'MatrixTuple':
        """All-zero tuple of the given shape."""
        return cls(matrix_class, np.zeros((m, n, n), dtype=np.complex128))

    @property
    def m(self) -> int:
        """Number of matrices in the tuple."""
        return self.matrices.shape[0]

    @property
    def n(self) -> int:
        """Side length of each matrix."""
        return self.matrices.shape[1]

    def __len__(self) -> int:
        return self.m

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.matrices)

    def __getitem__(self, r: int) -> np.ndarray:
        return self.matrices[r]

    def scaled(self, t: float) -> 'MatrixTuple':
        """Tuple with every member multiplied by ``t``."""
        return MatrixTuple(self.matrix_class, self.matrices * t)

    def with_class(self, matrix_class: MatrixClass) -> 'MatrixTuple':
        """Reinterpret the same matrices in another (containing) class."""
        return MatrixTuple(matrix_class, self.matrices)

    def multiplied_by_i(self) -> 'MatrixTuple':
        """Swap Hermitian and skew-Hermitian tuples isometrically."""
        swap = {
            MatrixClass.HERMITIAN: MatrixClass.SKEW_HERMITIAN,
            MatrixClass.SKEW_HERMITIAN: MatrixClass.HERMITIAN,
            MatrixClass.GENERAL_COMPLEX: MatrixClass.GENERAL_COMPLEX,
        }
        if self.matrix_class not in swap:
            raise ClassMembershipError(f"class {self.matrix_class.value} is not closed under multiplication by i")
        return MatrixTuple(swap[self.matrix_class], 1j * self.matrices)


@dataclass(frozen=True, eq=False)
class KElement:
    """Group element ``(P, R)`` of ``U(n) x O(m)``."""

    P: np.ndarray
    R: np.ndarray

    def __post_init__(self):
        P = as_matrix(self.P)
        R = np.asarray(self.R)
        if np.iscomplexobj(R):
            if np.max(np.abs(R.imag), initial=0.0) > TAU_ORTH:
                raise ClassMembershipError("rotation part R must be real")
            R = R.real
        R = np.array(R, dtype=np.float64)
        if R.ndim != 2 or R.shape[0] != R.shape[1] or R.shape[0] == 0:
            raise DimensionError(f"R must be a square matrix, got shape {R.shape}")
        if np.linalg.norm(P.conj().T @ P - np.eye(P.shape[0])) > TAU_ORTH:
            raise ClassMembershipError("P is not unitary")
        if np.linalg.norm(R.T @ R - np.eye(R.shape[0])) > TAU_ORTH:
            raise ClassMembershipError("R is not orthogonal")
        P.setflags(write=False)
        R.setflags(write=False)
        object.__setattr__(self, 'P', P)
        object.__setattr__(self, 'R', R)

    @classmethod
    def identity(cls, n: int, m: int) -> 'KElement':
        """Neutral element ``(I_n, I_m)``."""
        return cls(np.eye(n, dtype=np.complex128), np.eye(m))

    @property
    def n(self) -> int:
        """Side of the unitary part ``P``."""
        return self.P.shape[0]

    @property
    def m(self) -> int:
        """Side of the orthogonal part ``R``."""
        return self.R.shape[0]

    @property
    def is_real(self) -> bool:
        """Whether ``P`` is real, so the element acts on real classes."""
        return bool(np.max(np.abs(self.P.imag), initial=0.0) <= TAU_ORTH)
