"""Exception types raised across the package."""

from __future__ import annotations


class ReflexError(Exception):
    """Base class for all package errors."""


class ConfigError(ReflexError):
    """Invalid field configuration (non-prime modulus, bad polynomial, ...)."""


class SpecMismatch(ReflexError):
    """Operands live over different fields or ambient dimensions."""


class LengthMismatch(SpecMismatch):
    """Vectors of different length were combined."""


class DivisionByZero(ReflexError, ZeroDivisionError):
    """Inversion of the zero field element."""


class EmptyWeight(ReflexError):
    """Minimum weight requested for the zero subspace."""


class DimensionCap(ReflexError):
    """A dense object would exceed the configured size cap."""


class WorkCap(ReflexError):
    """The number of inner products in a numeric check exceeds the work cap."""


class UnsupportedField(ReflexError):
    """The operation is only defined for a particular field (usually qubits)."""


class StructureMismatch(ReflexError):
    """A constructed object disagrees with its closed-form description."""


class EigenResidual(ReflexError):
    """A constructed state fails its eigenvector residual check."""


class NonOrthogonal(ReflexError):
    """Codewords are not orthonormal within tolerance."""


class ConsistencyError(ReflexError):
    """Inputs are individually valid but mutually inconsistent (e.g. C1 not inside C)."""


class DomainError(ReflexError, ValueError):
    """Argument outside the domain of a formula."""


class NotFound(ReflexError):
    """The search exhausted its budget without a certified code."""


class ParseError(ReflexError):
    """Malformed input file."""

    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
