"""Coefficient matrices, commutator Gram matrices and the trace-chain check."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from src.basis.bases import BasisRotation, BasisSet, class_basis, rotate_basis
from src.basis.commutator_table import commutator_norm_table
from src.basis.index import pair_table
from src.exterior.compound import phi
from src.matcore.matrices import MatrixClass, MatrixTuple
from src.utils.exceptions import BasisMismatchError, NumericalDegeneracyError

logger = logging.getLogger(__name__)

RECONSTRUCTION_TOL = 1e-12


def tuple_coefficients(tup: MatrixTuple, basis: Optional[BasisSet] = None) -> np.ndarray:
    """Real ``N x m`` matrix ``B`` with ``(B_1, ..., B_m) = (e_1, ..., e_N) B``."""
    if basis is None:
        basis = class_basis(tup.matrix_class, tup.n)
    if basis.matrix_class is not tup.matrix_class or basis.n != tup.n:
        raise BasisMismatchError(
            f"basis ({basis.matrix_class.value}, n={basis.n}) does not fit tuple "
            f"({tup.matrix_class.value}, n={tup.n})"
        )
    coeffs = basis.coefficients(tup.matrices)
    residual = np.max(np.abs(basis.combine(coeffs) - tup.matrices), initial=0.0)
    scale = max(1.0, float(np.max(np.abs(tup.matrices), initial=0.0)))
    if residual > RECONSTRUCTION_TOL * scale:
        raise BasisMismatchError(f"tuple is not a real combination of the basis (residual {residual:.3e})")
    return coeffs


def commutator_gram(mats: np.ndarray) -> np.ndarray:
    """Gram matrix of ``{[X_p, X_q]}_{p<q}`` in lexicographic pair order."""
    pairs = pair_table(mats.shape[0])
    if len(pairs) == 0:
        return np.zeros((0, 0))
    left, right = mats[pairs[:, 0]], mats[pairs[:, 1]]
    comms = (left @ right - right @ left).reshape(len(pairs), -1)
    return (comms @ comms.conj().T).real


def gram_of_basis(basis: BasisSet) -> np.ndarray:
    """``C(E)``: pairwise inner products of the basis commutators."""
    return commutator_gram(basis.elements)


@lru_cache(maxsize=None)
def _class_gram(matrix_class: MatrixClass, n: int) -> np.ndarray:
    gram = gram_of_basis(class_basis(matrix_class, n))
    gram.setflags(write=False)
    return gram


def gram_of_tuple(tup: MatrixTuple, basis: Optional[BasisSet] = None, via_exterior: bool = False) -> np.ndarray:
    """``C(B)`` computed directly, or as ``phi(B^t) C(E) phi(B)`` when ``via_exterior``."""
    if not via_exterior:
        return commutator_gram(tup.matrices)
    coeffs = tuple_coefficients(tup, basis)
    basis_gram = _class_gram(tup.matrix_class, tup.n) if basis is None else gram_of_basis(basis)
    compound = phi(coeffs)
    return compound.T @ basis_gram @ compound


def spectral_frame(coeffs: np.ndarray) -> Tuple[np.ndarray, BasisRotation]:
    """Eigen-decomposition ``B B^t = Q diag(x) Q^t``.

    ``x`` is sorted descending and each column of ``Q`` has its first
    non-negligible entry positive.
    """
    if coeffs.shape[0] == 0:
        return np.zeros(0), BasisRotation(np.zeros((0, 0)))
    try:
        x, Q = np.linalg.eigh(coeffs @ coeffs.T)
    except np.linalg.LinAlgError as e:
        logger.error(f"Eigendecomposition of B B^t failed: {str(e)}")
        raise NumericalDegeneracyError(str(e)) from e
    order = np.argsort(x, kind='stable')[::-1]
    x, Q = x[order], Q[:, order]
    for col in range(Q.shape[1]):
        lead = np.flatnonzero(np.abs(Q[:, col]) > 1e-12)
        if lead.size and Q[lead[0], col] < 0:
            Q[:, col] *= -1
    return x, BasisRotation(Q)


@dataclass(frozen=True)
class TransformChainReport:
    """The four equal expressions for ``sum_{r,s} ||[B_r, B_s]||^2``."""

    direct: float
    exterior_trace: float
    compound_trace: float
    spectral_sum: float
    eigenvalues: Tuple[float, ...]
    energy: float

    @property
    def values(self) -> Tuple[float, float, float, float]:
        """``(direct, exterior_trace, compound_trace, spectral_sum)``."""
        return (self.direct, self.exterior_trace, self.compound_trace, self.spectral_sum)

    @property
    def scale(self) -> float:
        """Reference magnitude: the largest value or the squared energy, whichever is larger."""
        return max(max(abs(v) for v in self.values), self.energy ** 2)

    @property
    def min_eigenvalue(self) -> float:
        """Smallest eigenvalue of ``B B^t``; zero for an empty basis."""
        return min(self.eigenvalues, default=0.0)

    @property
    def max_deviation(self) -> float:
        """Largest spread of the four values, relative to :attr:`scale`."""
        scale = self.scale
        if scale == 0.0:
            return 0.0
        return (max(self.values) - min(self.values)) / scale


def verify_transform_chain(tup: MatrixTuple) -> TransformChainReport:
    """Evaluate each stage of the commutator trace chain for ``tup``."""
    basis = class_basis(tup.matrix_class, tup.n)
    coeffs = tuple_coefficients(tup, basis)
    basis_gram = _class_gram(tup.matrix_class, tup.n)

    mats = tup.matrices
    prod = np.einsum('rxy,syz->rsxz', mats, mats)
    direct = float(np.sum(np.abs(prod - np.swapaxes(prod, 0, 1)) ** 2))

    compound = phi(coeffs)
    exterior_trace = 2.0 * float(np.trace(compound.T @ basis_gram @ compound))
    compound_trace = 2.0 * float(np.trace(phi(coeffs @ coeffs.T) @ basis_gram))

    x, rotation = spectral_frame(coeffs)
    norms = commutator_norm_table(rotate_basis(basis, rotation).elements)
    spectral_sum = float(x @ norms @ x)

    energy = float(np.sum(np.abs(mats) ** 2))
    report = TransformChainReport(
        direct, exterior_trace, compound_trace, spectral_sum, tuple(float(v) for v in x), energy
    )
    logger.debug(f"Transform chain m={tup.m} n={tup.n}: deviation {report.max_deviation:.3e}")
    return report
