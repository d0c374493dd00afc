"""The DDVV functional, its simplex form ``f_Q`` and the Boettcher-Wenzel residual."""
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.basis.bases import BasisRotation, hermitian_basis, rotate_basis
from src.basis.commutator_table import commutator_norm_table
from src.matcore.matrices import MatrixTuple, as_matrix, commutator, norm_sq
from src.utils.exceptions import DimensionError

FOUR_THIRDS = 4.0 / 3.0


@dataclass(frozen=True)
class DdvvEvaluation:
    """Both sides of the inequality: ``lhs <= c * energy**2``."""

    lhs: float
    energy: float
    ratio: float


def commutator_lhs(mats: np.ndarray) -> float:
    """``sum_{r,s} ||[B_r, B_s]||^2`` over ordered pairs of a stack ``(m, n, n)``."""
    prod = np.einsum('rxy,syz->rsxz', mats, mats)
    return float(np.sum(np.abs(prod - np.swapaxes(prod, 0, 1)) ** 2))


def evaluate_stack(mats: np.ndarray) -> DdvvEvaluation:
    """:func:`evaluate` on a raw ``(m, n, n)`` stack."""
    lhs = commutator_lhs(mats)
    energy = float(np.sum(np.abs(mats) ** 2))
    ratio = lhs / energy ** 2 if energy > 0.0 else 0.0
    return DdvvEvaluation(lhs, energy, ratio)


def evaluate(tup: MatrixTuple) -> DdvvEvaluation:
    """Evaluate the DDVV functional; the ratio of a zero tuple is 0."""
    return evaluate_stack(tup.matrices)


class QuadraticForm:
    """``f_Q(x) = sum x_a x_b ||[Q_a, Q_b]||^2 - c (sum x_a)^2`` on the Hermitian basis.

    The commutator-norm matrix of the rotated basis is computed once per ``Q``.
    """

    def __init__(self, rotation: BasisRotation, n: int, constant: float = FOUR_THIRDS):
        if rotation.size != n * n:
            raise DimensionError(f"Q has side {rotation.size}, expected N = {n * n}")
        self.rotation = rotation
        self.n = n
        self.constant = float(constant)
        self.norms = commutator_norm_table(rotate_basis(hermitian_basis(n), rotation).elements)

    @property
    def size(self) -> int:
        """Dimension ``N = n^2`` of the simplex."""
        return self.n * self.n

    def _check(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.size,):
            raise DimensionError(f"x must have length {self.size}, got shape {x.shape}")
        return x

    def value(self, x: np.ndarray) -> float:
        """``f_Q(x)``."""
        x = self._check(x)
        return float(x @ self.norms @ x - self.constant * np.sum(x) ** 2)

    def gradient(self, x: np.ndarray) -> np.ndarray:
        """Euclidean gradient of ``f_Q`` at ``x``."""
        x = self._check(x)
        return 2.0 * self.norms @ x - 2.0 * self.constant * np.sum(x)

    @cached_property
    def lipschitz(self) -> float:
        """Lipschitz constant of the gradient (twice the spectral radius of the Hessian half)."""
        hessian_half = self.norms - self.constant * np.ones((self.size, self.size))
        return 2.0 * float(np.max(np.abs(np.linalg.eigvalsh(hessian_half))))


def f_q(x: np.ndarray, rotation: BasisRotation, n: int) -> float:
    """Evaluate ``f_Q(x)`` for the rotation ``Q``."""
    return QuadraticForm(rotation, n).value(x)


def bw_check(x: np.ndarray, y: np.ndarray) -> float:
    """Residual ``2 ||X||^2 ||Y||^2 - ||[X, Y]||^2`` of the Boettcher-Wenzel bound."""
    x = as_matrix(x)
    y = as_matrix(y)
    return 2.0 * norm_sq(x) * norm_sq(y) - norm_sq(commutator(x, y))
