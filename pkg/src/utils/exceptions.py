"""Exception hierarchy shared by all toolkit packages."""


class DdvvError(Exception):
    """Base class for toolkit errors."""


class DimensionError(DdvvError, ValueError):
    """Operands have incompatible sizes."""


class ClassMembershipError(DdvvError, ValueError):
    """A matrix lies outside the subspace of its declared class."""


class BasisMismatchError(DdvvError, ValueError):
    """A tuple was expanded over a basis of the wrong class or size."""


class UnsupportedCaseError(DdvvError, ValueError):
    """Requested (class, m, n) combination is outside the supported range."""


class ZeroEnergyError(DdvvError, ValueError):
    """The DDVV ratio is not differentiable at a zero tuple."""


class NumericalDegeneracyError(DdvvError, ArithmeticError):
    """A dense eigen or QR factorization did not converge."""


class ConfigError(DdvvError, ValueError):
    """Invalid configuration values or command-line usage."""


class InvalidMatrixError(DdvvError, ValueError):
    """Input is not a finite square matrix."""

