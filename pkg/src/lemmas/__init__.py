"""Numeric verifiers for the spectral-gap and rotated-basis lemmas."""
from src.lemmas.basis_lemmas import (
    Lemma4Value,
    commutator_row,
    index_subset,
    large_commutator_indices,
    lemma3_lhs,
    lemma3_maximizing_subset,
    lemma3_spectral_form,
    lemma4_lhs,
)
from src.lemmas.spectrum import (
    THRESHOLD,
    SpectrumVector,
    ThresholdSets,
    check_lemma1,
    is_lemma2_equality,
    lemma2_equality_witness,
    lemma2_lhs,
    threshold_sets,
)
from src.lemmas.trials import LemmaTrialResult, LemmaTrialRunner

__all__ = [
    'Lemma4Value', 'commutator_row', 'index_subset', 'large_commutator_indices', 'lemma3_lhs', 'lemma3_maximizing_subset',
    'lemma3_spectral_form', 'lemma4_lhs', 'THRESHOLD', 'SpectrumVector', 'ThresholdSets',
    'check_lemma1', 'is_lemma2_equality', 'lemma2_equality_witness', 'lemma2_lhs', 'threshold_sets',
    'LemmaTrialResult', 'LemmaTrialRunner',
]
