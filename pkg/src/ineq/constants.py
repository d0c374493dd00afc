"""Registry of known sharp constants ``c`` per (class, m, n)."""
import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from src.matcore.matrices import MatrixClass


class Status(str, enum.Enum):
    """Whether a registered constant is proved or only conjectured."""

    PROVED = 'proved'
    CONJECTURED = 'conjectured'


@dataclass(frozen=True)
class KnownConstant:
    """One registry row; ``*_max = None`` means unbounded."""

    matrix_class: MatrixClass
    m_min: int
    m_max: Optional[int]
    n_min: int
    n_max: Optional[int]
    c: Fraction
    status: Status
    source: str

    def matches(self, matrix_class: MatrixClass, m: int, n: int) -> bool:
        """Whether this entry covers ``(matrix_class, m, n)``."""
        return (
            self.matrix_class is matrix_class
            and self.m_min <= m and (self.m_max is None or m <= self.m_max)
            and self.n_min <= n and (self.n_max is None or n <= self.n_max)
        )

    @staticmethod
    def _describe(name: str, low: int, high: Optional[int]) -> str:
        if high == low:
            return f"{name}={low}"
        if high is None:
            return f"{name}>={low}"
        return f"{low}<={name}<={high}"

    @property
    def m_condition(self) -> str:
        """Human-readable range of ``m``, e.g. ``m>=3``."""
        return self._describe('m', self.m_min, self.m_max)

    @property
    def n_condition(self) -> str:
        """Human-readable range of ``n``, e.g. ``n=3``."""
        return self._describe('n', self.n_min, self.n_max)


def _row(cls, m_range, n_range, c, status, source):
    return KnownConstant(cls, m_range[0], m_range[1], n_range[0], n_range[1], Fraction(c), status, source)


_PROVED, _CONJ = Status.PROVED, Status.CONJECTURED
_M2, _M3 = (2, 2), (3, None)

REGISTRY: Tuple[KnownConstant, ...] = (
    _row(MatrixClass.SYMMETRIC, (2, None), (2, None), 1, _PROVED, 'DDVV inequality for real symmetric matrices'),
    _row(MatrixClass.SKEW_SYMMETRIC, (2, None), (2, 2), 0, _PROVED, 'one-dimensional class, all commutators vanish'),
    _row(MatrixClass.SKEW_SYMMETRIC, _M2, (3, 3), Fraction(1, 4), _PROVED, 'skew-symmetric pair bound, n=3'),
    _row(MatrixClass.SKEW_SYMMETRIC, _M2, (4, None), Fraction(1, 2), _PROVED, 'skew-symmetric pair bound, n>=4'),
    _row(MatrixClass.SKEW_SYMMETRIC, _M3, (3, 3), Fraction(1, 3), _PROVED, 'skew-symmetric DDVV-type inequality, n=3'),
    _row(MatrixClass.SKEW_SYMMETRIC, _M3, (4, None), Fraction(2, 3), _PROVED, 'skew-symmetric DDVV-type inequality, n>=4'),
    _row(MatrixClass.HERMITIAN, _M2, (2, None), 1, _PROVED, 'Hermitian pair, via Boettcher-Wenzel'),
    _row(MatrixClass.HERMITIAN, _M3, (2, None), Fraction(4, 3), _PROVED, 'Hermitian DDVV-type inequality'),
    _row(MatrixClass.SKEW_HERMITIAN, _M2, (2, None), 1, _PROVED, 'skew-Hermitian pair, equivalent to the Hermitian case'),
    _row(MatrixClass.SKEW_HERMITIAN, _M3, (2, None), Fraction(4, 3), _PROVED, 'skew-Hermitian, equivalent to the Hermitian case'),
    _row(MatrixClass.GENERAL_COMPLEX, _M2, (2, None), 1, _PROVED, 'Boettcher-Wenzel: 2||[X,Y]||^2 <= (||X||^2+||Y||^2)^2'),
    _row(MatrixClass.GENERAL_COMPLEX, _M3, (2, None), Fraction(4, 3), _CONJ, 'conjectured extension to arbitrary complex matrices'),
    _row(MatrixClass.GENERAL_REAL, _M2, (2, None), 1, _PROVED, 'Boettcher-Wenzel for real matrices'),
    _row(MatrixClass.GENERAL_REAL, _M3, (2, None), Fraction(4, 3), _CONJ, 'conjectured extension to arbitrary real matrices'),
)


def known_constant(matrix_class: MatrixClass, m: int, n: int) -> Optional[KnownConstant]:
    """Registry lookup; ``None`` outside ``m >= 2, n >= 2``."""
    matrix_class = MatrixClass(matrix_class)
    for row in REGISTRY:
        if row.matches(matrix_class, m, n):
            return row
    return None
