"""The ``K = U(n) x O(m)`` action on matrix tuples."""
import logging

import numpy as np

from src.matcore.matrices import KElement, MatrixTuple
from src.utils.exceptions import ClassMembershipError, DimensionError

logger = logging.getLogger(__name__)


def k_act(g: KElement, tup: MatrixTuple) -> MatrixTuple:
    """Apply ``(P, R)``: the r-th output is ``sum_j R[j, r] P* B_j P``.

    Real classes only admit a real orthogonal ``P``.
    """
    if g.n != tup.n or g.m != tup.m:
        raise DimensionError(f"K-element of size (n={g.n}, m={g.m}) cannot act on tuple (n={tup.n}, m={tup.m})")
    if tup.matrix_class.is_real and not g.is_real:
        raise ClassMembershipError(f"class {tup.matrix_class.value} needs a real orthogonal P")

    P = g.P.real.astype(np.complex128) if tup.matrix_class.is_real else g.P
    conjugated = P.conj().T @ tup.matrices @ P
    rotated = np.einsum('jr,jab->rab', g.R, conjugated)
    try:
        return MatrixTuple(tup.matrix_class, rotated)
    except ClassMembershipError:
        logger.error(f"K-action left class {tup.matrix_class.value}")
        raise
