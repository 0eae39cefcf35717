"""Reflexive stabilizers, their centralizers, and explicit codeword construction.

For subspaces ``C1 <= C`` of GF(d)^n the reflexive stabilizer is generated by
``D(v, v)`` for ``v`` in ``C^perp`` and ``D(w, 0)`` for ``w`` in ``C1``.  In
parameter terms an operator ``D(a, b)`` lies in the stabilizer (up to phase)
iff ``b in C^perp`` and ``a - b in C1``, and commutes with every generator iff
``a - b in C`` and ``b in C1^perp``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._parallel import parallel_map
from .errors import DimensionCap, EigenResidual, NonOrthogonal, SpecMismatch
from .galois import FieldSpec, Vector
from .graphs import LucSpec
from .pauli import STATE_CAP, ErrorOp, apply_op

EIGEN_TOL = 1e-10
GRAM_TOL = 1e-9
#: Dimension cap for the simultaneous-diagonalization fallback.
NUMERIC_CAP = 2**10


@dataclass(frozen=True)
class ReflexiveStabilizer:
    spec: LucSpec

    def __post_init__(self) -> None:
        self.spec.field.require_compatible()

    @property
    def field(self) -> FieldSpec:
        return self.spec.field

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def gen_diag(self) -> tuple[ErrorOp, ...]:
        return tuple(ErrorOp(self.field, v, v) for v in self.spec.C.perp.basis)

    @property
    def gen_flip(self) -> tuple[ErrorOp, ...]:
        zero = self.field.zero(self.n)
        return tuple(ErrorOp(self.field, w, zero) for w in self.spec.C1.basis)

    @property
    def generators(self) -> tuple[ErrorOp, ...]:
        return self.gen_diag + self.gen_flip

    def fp_generators(self) -> tuple[tuple[ErrorOp, ...], tuple[ErrorOp, ...]]:
        """Generators of the stabilizer as a group: ``x^j``-multiples of each basis vector."""
        f = self.field
        zero = f.zero(self.n)
        scales = [f.basis_element(j) for j in range(f.m)]
        diag = tuple(ErrorOp(f, f.vscale(s, v), f.vscale(s, v)) for v in self.spec.C.perp.basis for s in scales)
        flip = tuple(ErrorOp(f, f.vscale(s, w), zero) for w in self.spec.C1.basis for s in scales)
        return diag, flip


def _check_op(S: ReflexiveStabilizer, e: ErrorOp) -> None:
    if e.field != S.field or e.n != S.n:
        raise SpecMismatch(f"operator over {e.field}^{e.n}, stabilizer over {S.field}^{S.n}")


def stabilizer_contains(S: ReflexiveStabilizer, e: ErrorOp) -> bool:
    """Whether ``e`` is a stabilizer element up to phase."""
    _check_op(S, e)
    return S.spec.C.perp.contains(e.b) and S.spec.C1.contains(S.field.vsub(e.a, e.b))


def centralizer_contains(S: ReflexiveStabilizer, e: ErrorOp) -> bool:
    """Whether ``e`` commutes with every stabilizer generator."""
    _check_op(S, e)
    return S.spec.C.contains(S.field.vsub(e.a, e.b)) and S.spec.C1.perp.contains(e.b)


def logical_dimension(spec: LucSpec) -> int:
    return spec.k


# ---------------------------------------------------------------------------
# single-site states


def _prime_eigenstate(p: int, kappa: int) -> np.ndarray:
    """Eigenvector of X(1)Z(1) on one F_p coordinate (unnormalized amplitudes)."""
    if p == 2:
        return np.array([1j if kappa == 0 else -1j, 1.0], dtype=np.complex128)
    x = np.arange(p)
    expo = (x * (x - 1 - 2 * kappa) // 2) % p
    return np.exp(2j * np.pi * expo / p)


def single_site_eigenstate(field: FieldSpec, label: int) -> np.ndarray:
    """Unit vector in C^d that is an eigenvector of every ``X(y)Z(y)``.

    The state factorizes over the F_p coordinates of the site label: each
    coordinate ``gamma_j`` of ``label`` picks the coordinate eigenstate with
    ``X(1)Z(1)`` eigenvalue ``w**gamma_j`` (``i``/``-i`` for qubits).
    """
    field._check(label)
    p = field.p
    digits = field.digit_table
    amp = np.ones(field.d, dtype=np.complex128)
    for j, gamma in enumerate(field.coeffs(label)):
        amp = amp * _prime_eigenstate(p, gamma)[digits[:, j]]
    amp /= np.sqrt(field.d)
    _site_residual(field, amp)
    return amp


def _site_residual(field: FieldSpec, amp: np.ndarray) -> None:
    for j in range(field.m):
        y = field.basis_element(j)
        op = ErrorOp(field, (y,), (y,))
        out = apply_op(op, amp)
        lam = np.vdot(amp, out)
        if np.linalg.norm(out - lam * amp) > EIGEN_TOL or abs(abs(lam) - 1) > EIGEN_TOL:
            raise EigenResidual(f"site state fails X(y)Z(y) eigen check for y={y}")


def product_state(field: FieldSpec, labels: Vector) -> np.ndarray:
    out = np.ones(1, dtype=np.complex128)
    for lab in labels:
        out = np.kron(out, single_site_eigenstate(field, lab))
    return out


# ---------------------------------------------------------------------------
# codewords


@dataclass
class ReflexiveCode:
    """Orthonormal codewords of a reflexive stabilizer code.

    ``labels`` holds the coset representative of each codeword for the
    explicit construction and is ``None`` for the numeric one.
    ``eigenvalues`` maps each group generator ``(a, b)`` to its eigenvalue on
    the code.
    """

    stabilizer: ReflexiveStabilizer
    codewords: np.ndarray
    labels: Optional[list[Vector]]
    eigenvalues: dict[tuple[Vector, Vector], complex] = field(default_factory=dict)
    method: str = "formula"

    @property
    def spec(self) -> LucSpec:
        return self.stabilizer.spec

    @property
    def k(self) -> int:
        return self.spec.k

    def __len__(self) -> int:
        return self.codewords.shape[0]


def coset_representatives(spec: LucSpec) -> list[Vector]:
    """Lexicographically minimal representative of each coset of C1 in C."""
    seen: set[Vector] = set()
    reps = []
    for c in spec.C.elements(cap=STATE_CAP):
        key = spec.C1.reduce(c)
        if key not in seen:
            seen.add(key)
            reps.append(c)
    return reps


def _phi(spec: LucSpec, rep: Vector, shifts: list[Vector]) -> np.ndarray:
    f = spec.field
    psi = product_state(f, rep)
    zero = f.zero(spec.n)
    acc = np.zeros_like(psi)
    for c in shifts:
        acc += apply_op(ErrorOp(f, c, zero), psi)
    return acc / np.sqrt(len(shifts))


def _verify(S: ReflexiveStabilizer, words: np.ndarray) -> dict[tuple[Vector, Vector], complex]:
    gram = words.conj() @ words.T
    dev = np.abs(gram - np.eye(words.shape[0])).max() if words.size else 0.0
    if dev >= GRAM_TOL:
        raise NonOrthogonal(f"codeword Gram matrix deviates from identity by {dev:.3e}")
    diag, flip = S.fp_generators()
    eig: dict[tuple[Vector, Vector], complex] = {}
    for g in diag + flip:
        out = apply_op(g, words)
        lams = np.einsum("kn,kn->k", words.conj(), out)
        resid = np.linalg.norm(out - lams[:, None] * words, axis=1).max()
        if resid >= EIGEN_TOL:
            raise EigenResidual(f"generator {g} eigen-residual {resid:.3e}")
        if np.abs(lams - lams[0]).max() >= EIGEN_TOL:
            raise EigenResidual(f"generator {g} has different eigenvalues across codewords")
        if g in flip and abs(lams[0] - 1) >= EIGEN_TOL:
            raise EigenResidual(f"flip generator {g} has eigenvalue {lams[0]:.6f}, expected 1")
        eig[g.params] = complex(lams[0])
    return eig


def _build_formula(S: ReflexiveStabilizer) -> ReflexiveCode:
    spec = S.spec
    reps = coset_representatives(spec)
    shifts = spec.C1.elements(cap=STATE_CAP)
    words = np.array(parallel_map(lambda r: _phi(spec, r, shifts), reps))
    eig = _verify(S, words)
    return ReflexiveCode(S, words, reps, eig, "formula")


def _eigenspace(M: np.ndarray, values: np.ndarray, want_one: bool) -> np.ndarray:
    """Orthonormal basis (columns) of one eigenspace of the normal matrix ``M``."""
    order = np.argsort(np.abs(np.angle(values)), kind="stable")
    r = M.shape[0]
    for idx in order if not want_one else order[:1]:
        lam = values[idx]
        proj = np.eye(r, dtype=np.complex128)
        for mu in values:
            if mu != lam:
                proj = proj @ (M - mu * np.eye(r)) / (lam - mu)
        w, v = np.linalg.eigh((proj + proj.conj().T) / 2)
        keep = w > 0.5
        if keep.any():
            return v[:, keep]
    raise EigenResidual("no non-trivial eigenspace found")


def _build_numeric(S: ReflexiveStabilizer) -> ReflexiveCode:
    f = S.field
    N = f.d**S.n
    if N > NUMERIC_CAP:
        raise DimensionCap(f"numeric construction limited to dimension {NUMERIC_CAP}, got {N}")
    diag, flip = S.fp_generators()
    roots = np.exp(2j * np.pi * np.arange(f.phase_order) / f.phase_order)
    Q = np.eye(N, dtype=np.complex128)
    for g in diag + flip:
        GQ = apply_op(g, Q.T).T
        M = Q.conj().T @ GQ
        Q = Q @ _eigenspace(M, roots, want_one=g in flip)
    words = Q.T.copy()
    eig = _verify(S, words)
    return ReflexiveCode(S, words, None, eig, "numeric")


def build_codewords(spec: LucSpec, method: str = "auto", cap: int = STATE_CAP) -> ReflexiveCode:
    """Codewords ``|Phi_c'> = |C1|**-1/2 sum_{c in C1} D(c, 0)|Psi_c'>``.

    ``|Psi_c'>`` is the product of single-site eigenstates labelled by the coset
    representative ``c'``.  ``method="numeric"`` instead builds an orthonormal
    basis of the same kind of joint eigenspace by successive restriction;
    ``"auto"`` uses it only when the explicit states fail verification.
    """
    if method not in ("auto", "formula", "numeric"):
        raise ValueError(f"unknown method {method!r}")
    N = spec.field.d**spec.n
    if N > cap:
        raise DimensionCap(f"state dimension {N} exceeds cap {cap}")
    S = ReflexiveStabilizer(spec)
    if method == "numeric":
        return _build_numeric(S)
    try:
        return _build_formula(S)
    except EigenResidual:
        if method == "formula" or N > NUMERIC_CAP:
            raise
        return _build_numeric(S)

