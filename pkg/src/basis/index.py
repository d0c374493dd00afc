"""Index order on ``S = {(i, j)}`` and the shared pair-index tables.

Index pairs are 1-based ``(i, j)``; flat indices are 1-based
``alpha = (i - 1) n + j``, i.e. the lexicographic order on pairs.
"""
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple, Tuple

import numpy as np

from src.utils.exceptions import DimensionError


class IndexPair(NamedTuple):
    """1-based matrix index pair ``(i, j)``."""

    i: int
    j: int


def check_pair(pair: Tuple[int, int], n: int) -> IndexPair:
    """Validate ``1 <= i, j <= n`` and return the pair."""
    i, j = pair
    if not (1 <= i <= n and 1 <= j <= n):
        raise DimensionError(f"index pair {pair} out of range for n={n}")
    return IndexPair(int(i), int(j))


def flat_index(pair: Tuple[int, int], n: int) -> int:
    """Flat index ``alpha = (i - 1) n + j`` of ``pair``."""
    i, j = check_pair(pair, n)
    return (i - 1) * n + j


def index_pair(alpha: int, n: int) -> IndexPair:
    """Inverse of :func:`flat_index`."""
    if not 1 <= alpha <= n * n:
        raise DimensionError(f"flat index {alpha} out of range for n={n}")
    return IndexPair((alpha - 1) // n + 1, (alpha - 1) % n + 1)


@lru_cache(maxsize=None)
def pair_table(d: int) -> np.ndarray:
    """All ``(p, q)`` with ``0 <= p < q < d`` in lexicographic order, shape ``(C(d,2), 2)``.

    Rows and columns of compound matrices and commutator Gram matrices are
    indexed by this table.
    """
    table = np.array(list(combinations(range(d), 2)), dtype=np.intp).reshape(-1, 2)
    table.setflags(write=False)
    return table
