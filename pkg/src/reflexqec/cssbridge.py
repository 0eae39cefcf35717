"""Qubit basis change taking reflexive stabilizers to CSS form, plus rate formulas."""

from __future__ import annotations

import math

from .errors import DomainError, LengthMismatch, UnsupportedField
from .galois import FieldSpec, Vector, symplectic_star
from .reflexive import ReflexiveStabilizer

Pair = tuple[Vector, Vector]


def _require_qubits(field: FieldSpec) -> None:
    if field.d != 2:
        raise UnsupportedField(f"the CSS map is defined for qubits, not {field}")


def phi_map(field: FieldSpec, x: Vector, y: Vector) -> Pair:
    """``(x, y) -> (y, x + y)``, the linear map sending ``(a, a) -> (a, 0)`` and ``(b, 0) -> (0, b)``."""
    _require_qubits(field)
    if len(x) != len(y):
        raise LengthMismatch(f"parts of length {len(x)} and {len(y)}")
    return (tuple(y), field.vadd(x, y))


def phi_inverse(field: FieldSpec, x: Vector, y: Vector) -> Pair:
    _require_qubits(field)
    return (field.vadd(x, y), tuple(x))


def phi_on_stabilizer(S: ReflexiveStabilizer) -> list[Pair]:
    """Images of the generators: diagonal ones first, then flips."""
    _require_qubits(S.field)
    return [phi_map(S.field, g.a, g.b) for g in S.generators]


def split_css(pairs: list[Pair]) -> tuple[list[Vector], list[Vector]]:
    """Separate pure-X and pure-Z parameter pairs; raise if a pair is mixed."""
    xs, zs = [], []
    for x, z in pairs:
        if not any(z):
            xs.append(x)
        elif not any(x):
            zs.append(z)
        else:
            raise ValueError(f"pair {(x, z)} is not of CSS type")
    return xs, zs


def symplectic_preserved(field: FieldSpec, u: Pair, v: Pair) -> bool:
    """Whether commutation of ``u`` and ``v`` agrees with commutation of their images."""
    _require_qubits(field)
    before = symplectic_star(field, u, v) == 0
    after = symplectic_star(field, phi_map(field, *u), phi_map(field, *v)) == 0
    return before == after


def t_bound(wt_c1: int, wt_c2perp_minus_c1: int) -> int:
    """``min(floor((w1 - 1) / 2), floor((w2 - 1) / 2))``."""
    if wt_c1 < 1 or wt_c2perp_minus_c1 < 1:
        raise DomainError("weights must be at least 1")
    return min((wt_c1 - 1) // 2, (wt_c2perp_minus_c1 - 1) // 2)


def binary_entropy(x: float) -> float:
    if x in (0.0, 1.0):
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def asymptotic_rate(delta: float) -> float:
    """``1 - 2 delta log2(3) - H2(2 delta)`` for ``0 <= delta < 1/2``."""
    if not 0 <= delta < 0.5:
        raise DomainError(f"delta={delta} outside [0, 1/2)")
    return 1 - 2 * delta * math.log2(3) - binary_entropy(2 * delta)
