"""Tests for the rotated-basis commutator sums."""
import numpy as np
import pytest

from src.basis.bases import BasisRotation, hermitian_basis, rotate_basis
from src.basis.commutator_table import casimir_sum
from src.basis.index import flat_index
from src.ineq.extremal import equality_rotation
from src.lemmas.basis_lemmas import (
    commutator_row,
    index_subset,
    large_commutator_indices,
    lemma3_lhs,
    lemma3_maximizing_subset,
    lemma3_spectral_form,
    lemma4_lhs,
)
from src.matcore.sampling import rng_stream, sample_orthogonal
from src.utils.exceptions import DimensionError


def test_empty_subset():
    """Test that the empty subset sums to zero."""
    assert lemma3_lhs(BasisRotation.identity(4), 1, [], 2) == 0.0


def test_matching_pair_on_identity_rotation():
    """Matching pair on identity rotation."""
    alpha = flat_index((1, 2), 2)
    beta = flat_index((2, 1), 2)
    assert lemma3_lhs(BasisRotation.identity(4), alpha, [beta], 2) == pytest.approx(2 - 4 / 3)


def test_subset_validation():
    """Subset validation."""
    with pytest.raises(DimensionError):
        index_subset([0, 3], 2)
    with pytest.raises(DimensionError):
        lemma3_lhs(BasisRotation.identity(9), 1, [], 2)


@pytest.mark.parametrize('n', [2, 3, 4])
def test_lemma3_bound_and_spectral_agreement(n):
    """Lemma3 bound and spectral agreement."""
    for t in range(40):
        rng = rng_stream(6, n, t)
        rotation = BasisRotation(sample_orthogonal(n * n, rng))
        alpha = int(rng.integers(1, n * n + 1))
        best = lemma3_maximizing_subset(rotation, alpha, n)
        value = lemma3_lhs(rotation, alpha, best, n)
        assert value <= 4 / 3 + 1e-9
        assert lemma3_spectral_form(rotation, alpha, best, n) == pytest.approx(value, abs=1e-9)
        other = np.flatnonzero(rng.random(n * n) < 0.5) + 1
        assert lemma3_lhs(rotation, alpha, other, n) <= value + 1e-12


def test_adding_a_small_summand_decreases_the_sum(rng):
    """Adding a small summand decreases the sum."""
    n = 3
    rotation = BasisRotation(sample_orthogonal(9, rng))
    row = commutator_row(rotation, 2, n)
    best = lemma3_maximizing_subset(rotation, 2, n)
    small = [b + 1 for b in range(9) if row[b] < 4 / 3 and b + 1 not in best]
    assert lemma3_lhs(rotation, 2, best | {small[0]}, n) < lemma3_lhs(rotation, 2, best, n)


def test_lemma4_on_identity_rotation():
    """Lemma4 on identity rotation."""
    n = 3
    off = lemma4_lhs(BasisRotation.identity(9), flat_index((1, 2), n), n)
    diag = lemma4_lhs(BasisRotation.identity(9), flat_index((1, 1), n), n)
    assert off.direct == pytest.approx(2 * n) and off.closed_form == pytest.approx(2 * n)
    assert diag.direct == pytest.approx(2 * n - 2) and diag.closed_form == pytest.approx(2 * n - 2)


@pytest.mark.parametrize('n', [2, 3, 4])
def test_lemma4_closed_form_and_bound(n):
    """Lemma4 closed form and bound."""
    rotation = BasisRotation(sample_orthogonal(n * n, rng_stream(8, n)))
    for alpha in range(1, n * n + 1):
        value = lemma4_lhs(rotation, alpha, n)
        assert value.deviation <= 1e-9
        assert value.direct <= 2 * n + 1e-9


@pytest.mark.parametrize('n', [2, 3, 4])
def test_equality_rotation_has_two_large_commutators(n):
    """Equality rotation has two large commutators."""
    rotation = equality_rotation(n)
    assert large_commutator_indices(rotation, 1, n) == {2, 3}
    assert lemma3_maximizing_subset(rotation, 1, n) <= large_commutator_indices(rotation, 1, n)


def test_large_commutator_indices_include_the_boundary():
    """Large commutator indices include the boundary."""
    # the matching pair has norm 2 on the identity rotation, every other summand is at most 1
    alpha = flat_index((1, 2), 2)
    assert large_commutator_indices(BasisRotation.identity(4), alpha, 2) == {flat_index((2, 1), 2)}


def test_lemma4_closed_form_is_the_casimir_sum(rng):
    """Lemma4 closed form is the casimir sum."""
    n = 3
    rotation = BasisRotation(sample_orthogonal(9, rng))
    qa = rotate_basis(hermitian_basis(n), rotation).elements[4]
    assert lemma4_lhs(rotation, 5, n).closed_form == pytest.approx(casimir_sum(qa, qa, n), abs=1e-12)
