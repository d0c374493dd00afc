"""Complex matrix arithmetic, matrix classes, samplers and the K-action."""
from src.matcore.action import k_act
from src.matcore.matrices import (
    TAU_ORTH,
    KElement,
    MatrixClass,
    MatrixTuple,
    as_matrix,
    commutator,
    inner,
    is_member,
    membership_tolerance,
    norm_sq,
    project,
)
from src.matcore.sampling import (
    rng_stream,
    sample_class,
    sample_k_element,
    sample_orthogonal,
    sample_special_orthogonal,
    sample_tuple,
    sample_unitary,
    spawn_streams,
)

__all__ = [
    'TAU_ORTH', 'KElement', 'MatrixClass', 'MatrixTuple', 'as_matrix', 'commutator', 'inner',
    'is_member', 'membership_tolerance', 'norm_sq', 'project', 'k_act', 'rng_stream',
    'sample_class', 'sample_k_element', 'sample_orthogonal', 'sample_special_orthogonal',
    'sample_tuple', 'sample_unitary', 'spawn_streams',
]
