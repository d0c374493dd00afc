"""Second compound (exterior-square) map on rectangular matrices."""
import numpy as np

from src.basis.index import pair_table
from src.utils.exceptions import DimensionError


def phi(a: np.ndarray) -> np.ndarray:
    """Matrix of 2x2 minors of an ``m x n`` matrix.

    Entry ``((i, j), (k, l))`` is ``a_ik a_jl - a_il a_jk`` with both pair sets
    in lexicographic order; the result is ``C(m,2) x C(n,2)`` and is empty
    when ``m < 2`` or ``n < 2``.
    """
    a = np.asarray(a)
    if a.ndim != 2:
        raise DimensionError(f"phi expects a 2-d matrix, got shape {a.shape}")
    rows = pair_table(a.shape[0])
    cols = pair_table(a.shape[1])
    i, j = rows[:, 0], rows[:, 1]
    k, l = cols[:, 0], cols[:, 1]
    return a[np.ix_(i, k)] * a[np.ix_(j, l)] - a[np.ix_(i, l)] * a[np.ix_(j, k)]
