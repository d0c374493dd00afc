"""Closed-form commutator data of the Hermitian basis and their direct counterparts."""
from typing import Tuple

import numpy as np

from src.basis.index import IndexPair, check_pair, flat_index
from src.matcore.matrices import inner

HALF = 0.5


def _sorted_pairs(a: IndexPair, b: IndexPair, n: int) -> Tuple[IndexPair, IndexPair]:
    return (a, b) if flat_index(a, n) <= flat_index(b, n) else (b, a)


def pair_comm_norm_sq(a: Tuple[int, int], b: Tuple[int, int], n: int) -> float:
    """``||[E_a, E_b]||^2`` for Hermitian basis elements, from the case table.

    The pair is first put in index order; the table is stated for ``a <= b``.
    """
    a = check_pair(a, n)
    b = check_pair(b, n)
    (i, j), (k, l) = _sorted_pairs(a, b, n)

    # matching index pairs
    if i == l < j == k:
        return 2.0

    # three equal indices
    if i == j == k < l:
        return 1.0
    if i < j == k == l:
        return 1.0
    if i == j == l < k:
        return 1.0
    if j < i == k == l:
        return 1.0

    # exactly one shared index among three distinct values
    if i < j == k < l:
        return HALF
    if i == k < j < l:
        return HALF
    if i < k < j == l:
        return HALF
    if j == l < i < k:
        return HALF
    if j < l < i == k:
        return HALF
    if j < i == l < k:
        return HALF
    if i < j == l < k:
        return HALF
    if l < i < j == k:
        return HALF
    if i < l < j == k:
        return HALF
    if i == l < j < k:
        return HALF
    if i == l < k < j:
        return HALF
    if j < k == i < l:
        return HALF

    return 0.0


def gram_row_sum(a: Tuple[int, int], b: Tuple[int, int], n: int) -> float:
    """``sum_gamma <[E_a, E_gamma], [E_b, E_gamma]> = 2n d_ik d_jl - 2 d_ij d_kl``."""
    i, j = check_pair(a, n)
    k, l = check_pair(b, n)
    return 2.0 * n * float(i == k and j == l) - 2.0 * float(i == j and k == l)


def casimir_sum(x: np.ndarray, y: np.ndarray, n: int) -> float:
    """Basis-free form of :func:`gram_row_sum` for Hermitian ``X``, ``Y``."""
    return 2.0 * n * inner(x, y) - 2.0 * float(np.trace(x).real * np.trace(y).real)


def commutator_cube(elements: np.ndarray) -> np.ndarray:
    """All commutators ``[e_a, e_b]`` of a stack ``(d, n, n)``, shape ``(d, d, n, n)``."""
    prod = np.einsum('axy,byz->abxz', elements, elements)
    return prod - np.swapaxes(prod, 0, 1)


def commutator_norm_table(elements: np.ndarray) -> np.ndarray:
    """Matrix of ``||[e_a, e_b]||^2`` for a stack of matrices."""
    cube = commutator_cube(elements)
    return np.sum(np.abs(cube) ** 2, axis=(2, 3))


def direct_gram_row_sums(elements: np.ndarray) -> np.ndarray:
    """Direct ``sum_gamma <[e_a, e_gamma], [e_b, e_gamma]>`` for all ``(a, b)``."""
    cube = commutator_cube(elements)
    return np.einsum('agxy,bgxy->ab', cube, cube.conj()).real
