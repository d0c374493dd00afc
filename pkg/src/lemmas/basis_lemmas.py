"""Commutator-norm sums over a rotated Hermitian basis.

All indices are 1-based flat indices ``alpha = (i - 1) n + j``.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional

import numpy as np

from src.basis.bases import BasisRotation, hermitian_basis, rotate_basis, rotated_entry
from src.basis.commutator_table import casimir_sum
from src.utils.exceptions import DimensionError

FOUR_THIRDS = 4.0 / 3.0


def index_subset(members: Iterable[int], n: int) -> FrozenSet[int]:
    """Validated set of flat indices in ``{1, ..., n^2}``."""
    subset = frozenset(int(b) for b in members)
    bad = [b for b in subset if not 1 <= b <= n * n]
    if bad:
        raise DimensionError(f"flat indices {sorted(bad)} out of range for n={n}")
    return subset


def _check(rotation: BasisRotation, alpha: int, n: int) -> None:
    if rotation.size != n * n:
        raise DimensionError(f"Q has side {rotation.size}, expected N = {n * n}")
    if not 1 <= alpha <= n * n:
        raise DimensionError(f"flat index {alpha} out of range for n={n}")


def rotated_elements(rotation: BasisRotation, n: int) -> np.ndarray:
    """Stack of the rotated Hermitian basis ``Q_1, ..., Q_N``."""
    return rotate_basis(hermitian_basis(n), rotation).elements


def commutator_row(rotation: BasisRotation, alpha: int, n: int) -> np.ndarray:
    """``||[Q_alpha, Q_beta]||^2`` for every ``beta`` (0-based array position)."""
    _check(rotation, alpha, n)
    elements = rotated_elements(rotation, n)
    qa = elements[alpha - 1]
    comms = qa @ elements - elements @ qa
    return np.sum(np.abs(comms) ** 2, axis=(1, 2))


def lemma3_lhs(rotation: BasisRotation, alpha: int, subset: Iterable[int], n: int) -> float:
    """``sum_{beta in J} (||[Q_alpha, Q_beta]||^2 - 4/3)``; bounded by 4/3 for every ``J``."""
    subset = index_subset(subset, n)
    row = commutator_row(rotation, alpha, n)
    return float(sum(row[b - 1] - FOUR_THIRDS for b in subset))


def lemma3_maximizing_subset(rotation: BasisRotation, alpha: int, n: int) -> FrozenSet[int]:
    """The ``J`` of positive summands, which maximizes the sum."""
    row = commutator_row(rotation, alpha, n)
    return frozenset(int(b) + 1 for b in np.flatnonzero(row > FOUR_THIRDS))


def large_commutator_indices(rotation: BasisRotation, alpha: int, n: int) -> FrozenSet[int]:
    """Flat indices ``beta`` with ``||[Q_alpha, Q_beta]||^2 >= 4/3``.

    At an equality configuration this set has exactly two members for the
    leading element.
    """
    row = commutator_row(rotation, alpha, n)
    return frozenset(int(b) + 1 for b in np.flatnonzero(row >= FOUR_THIRDS))


def lemma3_spectral_form(rotation: BasisRotation, alpha: int, subset: Iterable[int], n: int) -> float:
    """The same sum evaluated in the eigenframe of ``Q_alpha``.

    With ``Q_alpha = U diag(lambda) U*`` and ``Q'_beta = U* Q_beta U`` the summand
    is ``sum_{i,j} ((lambda_i - lambda_j)^2 - 4/3) |Q'_beta[i, j]|^2``.
    """
    subset = index_subset(subset, n)
    _check(rotation, alpha, n)
    if not subset:
        return 0.0
    elements = rotated_elements(rotation, n)
    lam, U = np.linalg.eigh(elements[alpha - 1])
    weights = (lam[:, None] - lam[None, :]) ** 2 - FOUR_THIRDS
    chosen = elements[[b - 1 for b in sorted(subset)]]
    conjugated = U.conj().T @ chosen @ U
    return float(np.sum(weights * np.abs(conjugated) ** 2))


@dataclass(frozen=True)
class Lemma4Value:
    """Direct and closed-form row sums of one rotated element."""

    direct: float
    closed_form: float

    @property
    def deviation(self) -> float:
        """Absolute difference of the two forms."""
        return abs(self.direct - self.closed_form)


def lemma4_lhs(rotation: BasisRotation, alpha: int, n: int, row: Optional[np.ndarray] = None) -> Lemma4Value:
    """``sum_beta ||[Q_alpha, Q_beta]||^2`` and its closed form ``2n ||Q_alpha||^2 - 2 (tr Q_alpha)^2``.

    Both are at most ``2n``.
    """
    _check(rotation, alpha, n)
    if row is None:
        row = commutator_row(rotation, alpha, n)
    qa = np.array([[rotated_entry(rotation, alpha, i, j, n) for j in range(1, n + 1)] for i in range(1, n + 1)])
    closed = casimir_sum(qa, qa, n)
    return Lemma4Value(float(np.sum(row)), closed)
