"""Generalized Pauli error operators with exact phase bookkeeping.

An :class:`ErrorOp` ``(kappa, a, b)`` denotes ``zeta**kappa * D(a, b)`` with
``D(a, b) = X(a_1)Z(b_1) (x) ... (x) X(a_n)Z(b_n)``, ``X(a)|x> = |x + a>`` and
``Z(b)|x> = w**(b*x)|x>``.  Here ``w = exp(2 pi i / p)`` and ``zeta`` is the
phase unit of order ``r = field.phase_order`` (``r = 4`` for qubits so that
``(XZ)**2 = -1`` stays exact, ``r = p`` otherwise).  Products satisfy

    D(a, b) D(c, d) = w**chi(b, c) D(a + c, b + d).
"""

from __future__ import annotations

import warnings
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import DimensionCap, LengthMismatch, SpecMismatch, UnsupportedField
from .galois import FieldSpec, Vector, symplectic_star

#: Largest Hilbert-space dimension for a dense operator matrix (2**12 -> 256 MiB).
MATRIX_CAP = 2**12
#: Largest Hilbert-space dimension for state-vector operations.
STATE_CAP = 2**14


@dataclass(frozen=True)
class ErrorOp:
    """``zeta**kappa * D(a, b)`` over ``field``."""

    field: FieldSpec
    a: Vector
    b: Vector
    kappa: int = 0

    def __post_init__(self) -> None:
        a = self.field.check_vector(self.a)
        b = self.field.check_vector(self.b)
        if len(a) != len(b):
            raise LengthMismatch(f"flip part has length {len(a)}, phase part {len(b)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "kappa", int(self.kappa) % self.field.phase_order)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> ErrorOp:
        return cls(field, (0,) * n, (0,) * n, 0)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def params(self) -> tuple[Vector, Vector]:
        return (self.a, self.b)

    @property
    def is_identity(self) -> bool:
        return self.kappa == 0 and not any(self.a) and not any(self.b)

    @property
    def phase(self) -> complex:
        return complex(np.exp(2j * np.pi * self.kappa / self.field.phase_order))

    def __mul__(self, other: ErrorOp) -> ErrorOp:
        return op_multiply(self, other)

    def __repr__(self) -> str:
        a = "".join(map(str, self.a))
        b = "".join(map(str, self.b))
        return f"ErrorOp(k={self.kappa}, a={a}, b={b})"


def _match(e1: ErrorOp, e2: ErrorOp) -> None:
    if e1.field != e2.field:
        raise SpecMismatch(f"{e1.field} vs {e2.field}")
    if e1.n != e2.n:
        raise LengthMismatch(f"n={e1.n} vs n={e2.n}")


def op_multiply(e1: ErrorOp, e2: ErrorOp) -> ErrorOp:
    """Exact product ``e1 * e2``."""
    _match(e1, e2)
    f = e1.field
    scale = f.phase_order // f.p
    kappa = e1.kappa + e2.kappa + scale * f.chi(e1.b, e2.a)
    return ErrorOp(f, f.vadd(e1.a, e2.a), f.vadd(e1.b, e2.b), kappa)


def op_inverse(e: ErrorOp) -> ErrorOp:
    """Exact inverse, so that ``op_multiply(e, op_inverse(e))`` is the identity."""
    f = e.field
    scale = f.phase_order // f.p
    return ErrorOp(f, f.vneg(e.a), f.vneg(e.b), scale * f.chi(e.b, e.a) - e.kappa)


def op_commutes(e1: ErrorOp, e2: ErrorOp) -> bool:
    _match(e1, e2)
    return symplectic_star(e1.field, e1.params, e2.params) == 0


def omega_powers(field: FieldSpec) -> np.ndarray:
    """``w**t`` for ``t`` in ``range(p)``."""
    return np.exp(2j * np.pi * np.arange(field.p) / field.p)


def site_matrix(field: FieldSpec, a: int, b: int) -> np.ndarray:
    """The ``d x d`` matrix of ``X(a) Z(b)``."""
    d = field.d
    w = omega_powers(field)
    mat = np.zeros((d, d), dtype=np.complex128)
    for x in range(d):
        mat[field.add(x, a), x] = w[field.star(b, x)]
    return mat


def op_matrix(e: ErrorOp, cap: int = MATRIX_CAP) -> np.ndarray:
    """Dense ``d**n x d**n`` matrix, basis ordered by vector index."""
    dim = e.field.d**e.n
    if dim > cap:
        raise DimensionCap(f"dense matrix of dimension {dim} exceeds cap {cap}")
    out = np.array([[e.phase]], dtype=np.complex128)
    for ai, bi in zip(e.a, e.b):
        out = np.kron(out, site_matrix(e.field, ai, bi))
    return out


def apply_op(e: ErrorOp, states: np.ndarray, cap: int = STATE_CAP) -> np.ndarray:
    """Apply ``e`` to one state ``(N,)`` or a batch ``(K, N)``."""
    f = e.field
    dim = f.d**e.n
    if dim > cap:
        raise DimensionCap(f"state dimension {dim} exceeds cap {cap}")
    arr = np.asarray(states, dtype=np.complex128)
    single = arr.ndim == 1
    batch = np.ascontiguousarray(arr[None, :] if single else arr)
    if batch.shape[1] != dim:
        raise LengthMismatch(f"state of length {batch.shape[1]}, operator acts on {dim}")
    out = kernels.pauli_apply(
        batch, f.index(e.a), f.index(e.b), f.p, e.n * f.m, omega_powers(f), e.phase
    )
    return out[0] if single else out


class ErrorSet:
    """Ordered, deduplicated collection of :class:`ErrorOp` containing the identity."""

    def __init__(self, field: FieldSpec, n: int, ops: Iterable[ErrorOp] = (), warn: bool = False):
        seen: dict[tuple, ErrorOp] = {}
        for op in ops:
            if op.field != field:
                raise SpecMismatch(f"operator over {op.field} in an error set over {field}")
            if op.n != n:
                raise LengthMismatch(f"operator on {op.n} sites in an error set on {n}")
            seen.setdefault((op.kappa, op.a, op.b), op)
        ident = ErrorOp.identity(field, n)
        if (0, ident.a, ident.b) not in seen:
            if warn:
                warnings.warn("identity missing from error set; inserted", stacklevel=2)
            seen = {(0, ident.a, ident.b): ident, **seen}
        self.field = field
        self.n = n
        self.ops: tuple[ErrorOp, ...] = tuple(seen.values())

    def __iter__(self):
        return iter(self.ops)

    def __len__(self) -> int:
        return len(self.ops)

    def __contains__(self, op: ErrorOp) -> bool:
        return any(o == op for o in self.ops)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ErrorSet) and (self.field, self.n, self.ops) == (
            other.field,
            other.n,
            other.ops,
        )

    def params(self) -> set[tuple[Vector, Vector]]:
        return {op.params for op in self.ops}

    def with_phases(self, kappas: Sequence[int]) -> ErrorSet:
        """Copy with each operator's phase exponent shifted by ``kappas[i]``."""
        ops = [ErrorOp(o.field, o.a, o.b, o.kappa + k) for o, k in zip(self.ops, kappas)]
        return ErrorSet(self.field, self.n, ops)

    def __repr__(self) -> str:
        return f"ErrorSet({self.field}, n={self.n}, {list(self.ops)})"


def conjugate_set(E: ErrorSet) -> ErrorSet:
    """``{E1**-1 E2 : E1, E2 in E}`` in (E1, E2) lexicographic order, deduplicated."""
    inv = [op_inverse(e) for e in E]
    return ErrorSet(E.field, E.n, (op_multiply(i, e) for i in inv for e in E))


def gen_fully_correlated(n: int, field: Optional[FieldSpec] = None) -> ErrorSet:
    """``{1, X^n, (XZ)^n, Z^n}`` on ``n`` qubits."""
    field = field or FieldSpec(2)
    if field.d != 2:
        raise UnsupportedField("fully correlated noise is defined for qubits only")
    if n < 1:
        raise ValueError("n must be positive")
    one, zero = (1,) * n, (0,) * n
    ops = [ErrorOp(field, zero, zero), ErrorOp(field, one, zero), ErrorOp(field, one, one), ErrorOp(field, zero, one)]
    return ErrorSet(field, n, ops)


def gen_single_qudit(n: int, field: FieldSpec) -> ErrorSet:
    """Identity plus every ``D(alpha e_i, 0)`` and ``D(0, alpha e_i)``, ``alpha != 0``."""
    if n < 1:
        raise ValueError("n must be positive")
    zero = field.zero(n)
    flips = [ErrorOp(field, field.unit(n, i, al), zero) for i in range(n) for al in range(1, field.d)]
    phases = [ErrorOp(field, zero, field.unit(n, i, al)) for i in range(n) for al in range(1, field.d)]
    return ErrorSet(field, n, [ErrorOp.identity(field, n), *flips, *phases])
