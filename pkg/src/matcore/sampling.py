"""Seeded random streams and samplers for matrix classes and compact groups."""
from typing import List

import numpy as np

from src.matcore.matrices import KElement, MatrixClass, MatrixTuple, project
from src.utils.exceptions import DimensionError


def rng_stream(seed: int, index: int = 0, *sub_index: int) -> np.random.Generator:
    """Independent generator number ``index`` derived from ``seed``.

    Equal to the ``index``-th child of ``SeedSequence(seed).spawn(...)``, so a
    restart draws the same numbers however the restarts are scheduled.
    Extra ``sub_index`` values address grandchildren of that child.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index, *sub_index)))


def spawn_streams(seed: int, count: int) -> List[np.random.Generator]:
    """``count`` independent generators spawned from ``seed``."""
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(count)]


def _check_size(n: int) -> None:
    if n < 1:
        raise DimensionError(f"size must be >= 1, got {n}")


def sample_class(matrix_class: MatrixClass, n: int, rng: np.random.Generator) -> np.ndarray:
    """Gaussian matrix projected onto ``matrix_class``."""
    _check_size(n)
    if matrix_class.is_real:
        raw = rng.standard_normal((n, n)).astype(np.complex128)
    else:
        raw = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return project(raw, matrix_class)


def sample_tuple(matrix_class: MatrixClass, m: int, n: int, rng: np.random.Generator) -> MatrixTuple:
    """Tuple of ``m`` independent samples of ``matrix_class``."""
    return MatrixTuple(matrix_class, np.stack([sample_class(matrix_class, n, rng) for _ in range(m)]))


def sample_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary matrix.

    QR of a complex Ginibre matrix, with the phases of ``diag(R)`` moved into
    ``Q`` so the factorization (and hence the distribution) is unique.
    """
    _check_size(n)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def sample_orthogonal(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed real orthogonal matrix (sign-normalized QR)."""
    _check_size(d)
    q, r = np.linalg.qr(rng.standard_normal((d, d)))
    diag = np.diagonal(r)
    return q * np.sign(diag)


def sample_special_orthogonal(d: int, rng: np.random.Generator) -> np.ndarray:
    """Orthogonal matrix with determinant +1."""
    q = sample_orthogonal(d, rng)
    if np.linalg.det(q) < 0:
        q[:, -1] *= -1
    return q


def sample_k_element(n: int, m: int, rng: np.random.Generator, real: bool = False) -> KElement:
    """Random ``(P, R)``; ``real=True`` restricts ``P`` to ``O(n)``."""
    P = sample_orthogonal(n, rng).astype(np.complex128) if real else sample_unitary(n, rng)
    return KElement(P, sample_orthogonal(m, rng))
