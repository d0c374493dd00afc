"""The DDVV functional, known constants, extremal tuples and equality diagnostics."""
from src.ineq.constants import REGISTRY, KnownConstant, Status, known_constant
from src.ineq.diagnostics import EqualityDiagnostics, equality_diagnostics
from src.ineq.extremal import equality_rotation, extremal_tuple, pauli_triple
from src.ineq.functional import (
    FOUR_THIRDS,
    DdvvEvaluation,
    QuadraticForm,
    bw_check,
    commutator_lhs,
    evaluate,
    evaluate_stack,
    f_q,
)

__all__ = [
    'REGISTRY', 'KnownConstant', 'Status', 'known_constant', 'EqualityDiagnostics',
    'equality_diagnostics', 'equality_rotation', 'extremal_tuple', 'pauli_triple', 'FOUR_THIRDS',
    'DdvvEvaluation', 'QuadraticForm', 'bw_check', 'commutator_lhs', 'evaluate', 'evaluate_stack', 'f_q',
]
