"""Equality diagnostics for Hermitian and skew-Hermitian tuples.

Equality tuples are characterized up to the ``U(n) x O(m)`` action, so the
checks below only use orbit invariants: the spectrum of ``B B^t`` and the
algebraic structure of the rotated basis elements spanning its top eigenspace.
"""
import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np

from src.basis.bases import hermitian_basis, rotate_basis
from src.exterior.gram import spectral_frame, tuple_coefficients
from src.ineq.constants import known_constant
from src.ineq.functional import FOUR_THIRDS, evaluate
from src.matcore.matrices import MatrixClass, MatrixTuple
from src.utils.exceptions import UnsupportedCaseError

logger = logging.getLogger(__name__)

EIG_REL_TOL = 1e-8
STRUCTURE_TOL = 1e-8
RESIDUAL_REL_TOL = 1e-9


@dataclass(frozen=True)
class EqualityDiagnostics:
    """How a tuple compares with the equality configuration."""

    constant: float
    residual: float
    energy: float
    eigenvalues: Tuple[float, ...]
    rank: int
    expected_rank: int
    top_equal: bool
    rank_two_support: bool
    traceless: bool
    anticommuting: bool
    common_projector: bool

    @property
    def residual_vanishes(self) -> bool:
        """Whether ``c E^2 - lhs`` is zero relative to ``E^2``."""
        return self.energy > 0 and abs(self.residual) <= RESIDUAL_REL_TOL * self.energy ** 2

    @property
    def canonical(self) -> bool:
        """Equality holds and the top eigenspace has the Pauli structure."""
        return (
            self.residual_vanishes
            and self.rank == self.expected_rank
            and self.top_equal
            and self.rank_two_support
            and self.traceless
            and self.anticommuting
            and self.common_projector
        )

    def to_dict(self) -> Dict[str, Any]:
        """Plain-dict form for reports, including the derived flags."""
        out = asdict(self)
        out['eigenvalues'] = list(self.eigenvalues)
        out['residual_vanishes'] = self.residual_vanishes
        out['canonical'] = self.canonical
        return out


def _numerical_rank(mat: np.ndarray) -> int:
    sv = np.linalg.svd(mat, compute_uv=False)
    if sv.size == 0 or sv[0] == 0:
        return 0
    return int(np.sum(sv > STRUCTURE_TOL * sv[0]))


def _structure(frame: np.ndarray) -> Tuple[bool, bool, bool, bool]:
    """Rank-2 support, tracelessness, anticommutation and the common projector test."""
    if frame.shape[0] == 0:
        return False, False, False, False
    support = _numerical_rank(np.concatenate(list(frame), axis=1)) == 2 and all(
        _numerical_rank(q) == 2 for q in frame
    )
    traceless = bool(np.all(np.abs(np.trace(frame, axis1=1, axis2=2)) <= STRUCTURE_TOL))
    anticommuting = all(
        np.linalg.norm(frame[a] @ frame[b] + frame[b] @ frame[a]) <= STRUCTURE_TOL
        for a, b in combinations(range(frame.shape[0]), 2)
    )
    squares = frame @ frame
    projector = 2.0 * squares[0]
    common = bool(
        all(np.linalg.norm(sq - squares[0]) <= STRUCTURE_TOL for sq in squares)
        and np.linalg.norm(projector @ projector - projector) <= STRUCTURE_TOL
        and abs(np.trace(projector).real - 2.0) <= STRUCTURE_TOL
    )
    return support, traceless, anticommuting, common


def equality_diagnostics(tup: MatrixTuple, c: Optional[Union[Fraction, float]] = None) -> EqualityDiagnostics:
    """Diagnose how close ``tup`` is to an equality configuration.

    Args:
        tup: Hermitian or skew-Hermitian tuple
        c: Constant to test against; defaults to the registry value

    Returns:
        EqualityDiagnostics record
    """
    if tup.matrix_class not in (MatrixClass.HERMITIAN, MatrixClass.SKEW_HERMITIAN):
        raise UnsupportedCaseError(
            f"equality diagnostics need a Hermitian or skew-Hermitian tuple, got {tup.matrix_class.value}"
        )
    herm = tup if tup.matrix_class is MatrixClass.HERMITIAN else MatrixTuple(MatrixClass.HERMITIAN, -1j * tup.matrices)
    if c is None:
        row = known_constant(MatrixClass.HERMITIAN, herm.m, herm.n)
        c = row.c if row is not None else FOUR_THIRDS
    c = float(c)

    ev = evaluate(herm)
    x, rotation = spectral_frame(tuple_coefficients(herm))
    rank = int(np.sum(x > EIG_REL_TOL * ev.energy)) if ev.energy > 0 else 0
    top = x[:rank]
    top_equal = rank > 0 and float(top.max() - top.min()) <= EIG_REL_TOL * float(top.max())

    frame = rotate_basis(hermitian_basis(herm.n), rotation).elements[:rank]
    support, traceless, anticommuting, common = _structure(frame)

    diagnostics = EqualityDiagnostics(
        constant=c,
        residual=c * ev.energy ** 2 - ev.lhs,
        energy=ev.energy,
        eigenvalues=tuple(float(v) for v in x),
        rank=rank,
        expected_rank=3 if herm.m >= 3 else 2,
        top_equal=top_equal,
        rank_two_support=support,
        traceless=traceless,
        anticommuting=anticommuting,
        common_projector=common,
    )
    logger.debug(f"Equality diagnostics: rank {rank}, residual {diagnostics.residual:.3e}, "
                 f"canonical {diagnostics.canonical}")
    return diagnostics
