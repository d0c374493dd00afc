"""Normalized spectra and the threshold index sets built on them."""
from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple

import numpy as np

from src.utils.exceptions import DimensionError, NumericalDegeneracyError

THRESHOLD = 2.0 / np.sqrt(3.0)
LEMMA2_BOUND = 2.0 / 3.0
LEMMA2_EQUALITY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class SpectrumVector:
    """Real ``lambda_1 >= ... >= lambda_n`` with ``sum lambda_i^2 = 1``."""

    values: np.ndarray

    @classmethod
    def from_values(cls, values: Sequence[float]) -> 'SpectrumVector':
        """Sort descending and normalize; unsorted input is accepted."""
        lam = np.sort(np.asarray(values, dtype=np.float64).ravel())[::-1]
        if lam.size == 0:
            raise DimensionError("spectrum must have at least one entry")
        norm = np.linalg.norm(lam)
        if not np.isfinite(norm) or norm == 0.0:
            raise NumericalDegeneracyError("cannot normalize a zero or non-finite spectrum")
        lam = lam / norm
        lam.setflags(write=False)
        return cls(lam)

    @property
    def n(self) -> int:
        """Length of the spectrum."""
        return self.values.size


@dataclass(frozen=True)
class ThresholdSets:
    """1-based index sets whose spectral gaps exceed ``2/sqrt(3)``."""

    first_row: FrozenSet[int]
    last_column: FrozenSet[int]
    pairs: FrozenSet[Tuple[int, int]]

    @property
    def size(self) -> int:
        """Number of threshold pairs."""
        return len(self.pairs)


def threshold_sets(lam: SpectrumVector) -> ThresholdSets:
    """Index sets of spectral gaps above ``2/sqrt(3)``, with ``n_0`` as their size."""
    values = lam.values
    n = lam.n
    gaps = values[:, None] - values[None, :]
    rows, cols = np.nonzero(gaps > THRESHOLD)
    pairs = frozenset((int(i) + 1, int(j) + 1) for i, j in zip(rows, cols))
    first_row = frozenset(j for i, j in pairs if i == 1)
    last_column = frozenset(i for i, j in pairs if j == n)
    return ThresholdSets(first_row, last_column, pairs)


def check_lemma1(lam: SpectrumVector) -> bool:
    """True iff the large-gap pairs all share the first row or all share the last column."""
    sets = threshold_sets(lam)
    from_first = frozenset((1, j) for j in sets.first_row)
    from_last = frozenset((i, lam.n) for i in sets.last_column)
    return sets.pairs == from_first or sets.pairs == from_last


def lemma2_lhs(lam: SpectrumVector) -> float:
    """``sum over large-gap pairs of ((lambda_i - lambda_j)^2 - 4/3)``; at most 2/3."""
    values = lam.values
    return float(sum((values[i - 1] - values[j - 1]) ** 2 - 4.0 / 3.0 for i, j in threshold_sets(lam).pairs))


def is_lemma2_equality(lam: SpectrumVector) -> bool:
    """Whether ``lam`` attains the ``2/3`` bound within tolerance."""
    return abs(lemma2_lhs(lam) - LEMMA2_BOUND) <= LEMMA2_EQUALITY_TOL


def lemma2_equality_witness(n: int) -> SpectrumVector:
    """``(1/sqrt2, 0, ..., 0, -1/sqrt2)``, the only spectrum reaching 2/3."""
    if n < 2:
        raise DimensionError(f"the equality spectrum needs n >= 2, got {n}")
    values = np.zeros(n)
    values[0], values[-1] = 1.0 / np.sqrt(2.0), -1.0 / np.sqrt(2.0)
    return SpectrumVector.from_values(values)
