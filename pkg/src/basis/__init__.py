"""Class bases, the flat index order and closed-form commutator data."""
from src.basis.bases import (
    BasisRotation,
    BasisSet,
    class_basis,
    hermitian_basis,
    rotate_basis,
    rotated_entry,
)
from src.basis.commutator_table import (
    casimir_sum,
    commutator_cube,
    commutator_norm_table,
    direct_gram_row_sums,
    gram_row_sum,
    pair_comm_norm_sq,
)
from src.basis.index import IndexPair, flat_index, index_pair, pair_table

__all__ = [
    'BasisRotation', 'BasisSet', 'class_basis', 'hermitian_basis', 'rotate_basis', 'rotated_entry',
    'casimir_sum', 'commutator_cube', 'commutator_norm_table', 'direct_gram_row_sums',
    'gram_row_sum', 'pair_comm_norm_sq', 'IndexPair', 'flat_index', 'index_pair', 'pair_table',
]
