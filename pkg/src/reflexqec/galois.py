"""Arithmetic in GF(p^m), vectors over GF(p^m)^n and F_d-linear subspaces.

Field elements are plain ints in ``range(d)``: the element
``a_0 + a_1 x + ... + a_{m-1} x^{m-1}`` is encoded as ``sum(a_i * p**i)``.
Vectors are tuples of such ints.  A vector ``v`` of length ``n`` also has an
*index* ``sum(v_i * d**(n-1-i))``; the base-p digits of the index are exactly
the F_p coordinates of ``v``, so vector addition is digit-wise addition mod p
and lexicographic order on vectors is numeric order on indices.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ConfigError, DivisionByZero, EmptyWeight, LengthMismatch, SpecMismatch

Vector = tuple[int, ...]

#: Enumeration cap for element listings (d**dim).
ENUM_CAP = 2**20

# Little-endian coefficients, monic.  The m = 2 entries are chosen so that the
# coefficient dot product agrees with a linear functional of the field product.
IRREDUCIBLE_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (4, 2, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 2): (6, 1, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p**0.5) + 1))


def _poly_mod(num: list[int], den: Sequence[int], p: int) -> list[int]:
    num = list(num)
    inv_lead = pow(den[-1], p - 2, p)
    for shift in range(len(num) - len(den), -1, -1):
        coef = num[shift + len(den) - 1] * inv_lead % p
        if coef:
            for i, c in enumerate(den):
                num[shift + i] = (num[shift + i] - coef * c) % p
    return num[: len(den) - 1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] % p == 0:
        return False
    for k in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            if not any(_poly_mod(poly, (*low, 1), p)):
                return False
    return True


@functools.lru_cache(maxsize=None)
def _tables(p: int, m: int, poly: tuple[int, ...]) -> dict[str, np.ndarray]:
    d = p**m
    digits = np.array([[(v // p**j) % p for j in range(m)] for v in range(d)], dtype=np.int64)
    weights = p ** np.arange(m, dtype=np.int64)
    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    neg = ((-digits) % p) @ weights
    # x^j * b for every b, reduced modulo the polynomial
    shifted = np.empty((m, d, m), dtype=np.int64)
    cur = digits.copy()
    for j in range(m):
        shifted[j] = cur
        top = cur[:, m - 1].copy()
        nxt = np.zeros_like(cur)
        nxt[:, 1:] = cur[:, :-1]
        nxt = (nxt - top[:, None] * np.array(poly[:m], dtype=np.int64)[None, :]) % p
        cur = nxt
    prod = np.zeros((d, d, m), dtype=np.int64)
    for j in range(m):
        prod += digits[:, j][:, None, None] * shifted[j][None, :, :]
    mul = (prod % p) @ weights
    inv = np.zeros(d, dtype=np.int64)
    for a in range(1, d):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
    star = (digits @ digits.T) % p
    return {"digits": digits, "add": add, "neg": neg, "mul": mul, "inv": inv, "star": star}


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p**m) with a fixed polynomial basis.

    ``compatible`` records whether the coefficient dot product ``a * b`` equals
    the constant coefficient of ``a b``; the code constructions need that link
    between the two inner products.  It holds for the built-in m <= 2
    polynomials and cannot hold for any polynomial basis with m >= 3, so those
    fields support arithmetic and error operators only.  With ``strict`` (the
    default whenever a polynomial is supplied) an incompatible polynomial is
    rejected at construction.
    """

    p: int
    m: int = 1
    irreducible: Optional[tuple[int, ...]] = None
    strict: Optional[bool] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        p, m = self.p, self.m
        if not is_prime(p):
            raise ConfigError(f"p={p} is not prime")
        if m < 1:
            raise ConfigError(f"extension degree must be >= 1, got {m}")
        poly = self.irreducible
        strict = self.strict if self.strict is not None else poly is not None
        if poly is None:
            poly = (0, 1) if m == 1 else IRREDUCIBLE_TABLE.get((p, m))
            if poly is None:
                raise ConfigError(f"no built-in polynomial for GF({p}^{m}); pass irreducible=")
        poly = tuple(int(c) % p for c in poly)
        if len(poly) != m + 1 or poly[-1] != 1:
            raise ConfigError(f"polynomial {poly} is not monic of degree {m}")
        if m > 1 and not is_irreducible(poly, p):
            raise ConfigError(f"polynomial {poly} is reducible over F_{p}")
        object.__setattr__(self, "irreducible", poly)
        if strict and not self.compatible:
            raise ConfigError(
                f"GF({p}^{m}) with polynomial {poly}: coefficient inner product is not a "
                "functional of the field product; use strict=False for arithmetic only"
            )

    def require_compatible(self) -> None:
        """Raise :class:`ConfigError` unless the two inner products are linked."""
        if not self.compatible:
            raise ConfigError(
                f"{self} with polynomial {self.irreducible} does not link the coefficient "
                "inner product to the field inner product; code constructions are unavailable"
            )

    # -- basic data -----------------------------------------------------
    @property
    def d(self) -> int:
        return self.p**self.m

    @property
    def phase_order(self) -> int:
        """Order of the phase unit used for error operators (4 for qubits, else p)."""
        return 4 if self.p == 2 else self.p

    @functools.cached_property
    def _t(self) -> dict[str, np.ndarray]:
        return _tables(self.p, self.m, self.irreducible)

    @functools.cached_property
    def _add(self):
        return self._t["add"].tolist() if self.d <= 256 else self._t["add"]

    @functools.cached_property
    def _mul(self):
        return self._t["mul"].tolist() if self.d <= 256 else self._t["mul"]

    @functools.cached_property
    def _neg(self) -> list[int]:
        return self._t["neg"].tolist()

    @functools.cached_property
    def _inv(self) -> list[int]:
        return self._t["inv"].tolist()

    @functools.cached_property
    def _star(self):
        return self._t["star"].tolist() if self.d <= 256 else self._t["star"]

    @property
    def add_table(self) -> np.ndarray:
        return self._t["add"]

    @property
    def mul_table(self) -> np.ndarray:
        return self._t["mul"]

    @property
    def digit_table(self) -> np.ndarray:
        """``digit_table[v, j]`` is the coefficient of x^j in element v."""
        return self._t["digits"]

    @functools.cached_property
    def compatible(self) -> bool:
        mul = self._t["mul"]
        return bool(np.array_equal(self._t["star"], mul % self.p))

    def __str__(self) -> str:
        return f"GF({self.p})" if self.m == 1 else f"GF({self.p}^{self.m})"

    # -- scalar arithmetic -------------------------------------------------
    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.d:
                raise ValueError(f"{x} is not an element of {self}")

    def add(self, x: int, y: int) -> int:
        return self._add[x][y]

    def sub(self, x: int, y: int) -> int:
        return self._add[x][self._neg[y]]

    def neg(self, x: int) -> int:
        return self._neg[x]

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        return self._inv[x]

    def star(self, x: int, y: int) -> int:
        """Coefficient dot product ``sum(alpha_i * beta_i) mod p``."""
        return self._star[x][y]

    def coeffs(self, x: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.digit_table[x])

    def basis_element(self, j: int) -> int:
        """Encoding of x**j, the j-th element of the polynomial basis."""
        return self.p**j

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    # -- vectors ---------------------------------------------------------
    def vadd(self, u: Vector, v: Vector) -> Vector:
        _same_length(u, v)
        add = self._add
        return tuple(add[x][y] for x, y in zip(u, v))

    def vsub(self, u: Vector, v: Vector) -> Vector:
        _same_length(u, v)
        add, neg = self._add, self._neg
        return tuple(add[x][neg[y]] for x, y in zip(u, v))

    def vneg(self, u: Vector) -> Vector:
        return tuple(self._neg[x] for x in u)

    def vscale(self, c: int, u: Vector) -> Vector:
        row = self._mul[c]
        return tuple(row[x] for x in u)

    def inner(self, u: Vector, v: Vector) -> int:
        """F_d-valued bilinear form ``sum(u_i v_i)``."""
        _same_length(u, v)
        acc = 0
        add, mul = self._add, self._mul
        for x, y in zip(u, v):
            acc = add[acc][mul[x][y]]
        return acc

    def chi(self, u: Vector, v: Vector) -> int:
        """F_p-valued form ``sum(u_i * v_i)`` built from the coefficient dot product."""
        _same_length(u, v)
        star = self._star
        return sum(star[x][y] for x, y in zip(u, v)) % self.p

    def zero(self, n: int) -> Vector:
        return (0,) * n

    def unit(self, n: int, i: int, value: int = 1) -> Vector:
        v = [0] * n
        v[i] = value
        return tuple(v)

    def check_vector(self, v: Iterable[int], n: Optional[int] = None) -> Vector:
        v = tuple(int(x) for x in v)
        if n is not None and len(v) != n:
            raise LengthMismatch(f"expected length {n}, got {len(v)}")
        self._check(*v)
        return v

    def index(self, v: Vector) -> int:
        idx = 0
        for x in v:
            idx = idx * self.d + x
        return idx

    def vector(self, idx: int, n: int) -> Vector:
        out = []
        for _ in range(n):
            idx, r = divmod(idx, self.d)
            out.append(r)
        return tuple(reversed(out))

    def all_vectors(self, n: int) -> np.ndarray:
        """All of GF(d)^n as a ``(d**n, n)`` array in lexicographic order."""
        if self.d**n > ENUM_CAP * 16:
            raise ValueError(f"refusing to enumerate {self.d}**{n} vectors")
        grids = np.indices((self.d,) * n, dtype=np.int64)
        return grids.reshape(n, -1).T.copy()

    def to_digits(self, arr: np.ndarray) -> np.ndarray:
        """F_p coordinates: shape ``(..., n)`` -> ``(..., n*m)``."""
        arr = np.asarray(arr, dtype=np.int64)
        return self.digit_table[arr].reshape(*arr.shape[:-1], arr.shape[-1] * self.m)

    def from_digits(self, dig: np.ndarray) -> np.ndarray:
        dig = np.asarray(dig, dtype=np.int64)
        n = dig.shape[-1] // self.m
        blocks = dig.reshape(*dig.shape[:-1], n, self.m)
        return blocks @ (self.p ** np.arange(self.m, dtype=np.int64))

    def digit_weights(self, n: int) -> np.ndarray:
        """``to_digits(v) @ digit_weights(n) == index(v)``."""
        pos = [(self.m * (n - 1 - i) + j) for i in range(n) for j in range(self.m)]
        return self.p ** np.array(pos, dtype=np.int64)


def _same_length(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise LengthMismatch(f"vector lengths {len(u)} and {len(v)} differ")


def weight(v: Sequence[int]) -> int:
    """Hamming weight: number of non-zero entries."""
    return sum(1 for x in v if x)


@dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`FieldSpec`, with operator overloading."""

    field: FieldSpec
    value: int

    def __post_init__(self) -> None:
        self.field._check(self.value)

    def _other(self, other: FieldElement) -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise SpecMismatch(f"{self.field} vs {other.field}")
        return other.value

    def __add__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        y = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(y)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field}({self.value})"


def field_arith(op: str, x: FieldElement, y: Optional[FieldElement] = None) -> FieldElement:
    """Dispatch ``add | sub | mul | inv | neg`` on field elements."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inverse()
    if op == "neg":
        return -x
    raise ValueError(f"unknown field operation {op!r}")


def star_scalar(x: FieldElement, y: FieldElement) -> int:
    x._other(y)
    return x.field.star(x.value, y.value)


def inner_fd(field: FieldSpec, a: Vector, b: Vector) -> int:
    return field.inner(a, b)


def inner_chi(field: FieldSpec, a: Vector, b: Vector) -> int:
    return field.chi(a, b)


def symplectic_star(field: FieldSpec, ab: tuple[Vector, Vector], cd: tuple[Vector, Vector]) -> int:
    """``chi(b, c) - chi(a, d) mod p``; zero iff the two error operators commute."""
    (a, b), (c, d) = ab, cd
    if not len(a) == len(b) == len(c) == len(d):
        raise LengthMismatch("symplectic operands must share n")
    return (field.chi(b, c) - field.chi(a, d)) % field.p


# ---------------------------------------------------------------------------
# linear algebra over F_p (numpy) and F_d (tables)


def fp_rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p; zero rows dropped."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape if a.ndim == 2 else (0, 0)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def fp_nullspace(mat: np.ndarray, p: int, ncols: int) -> np.ndarray:
    """Basis (rows) of ``{x : mat @ x == 0 mod p}``."""
    mat = np.asarray(mat, dtype=np.int64).reshape(-1, ncols)
    r, pivots = fp_rref(mat, p)
    free = [c for c in range(ncols) if c not in pivots]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        for row, pc in enumerate(pivots):
            out[i, pc] = (-r[row, f]) % p
    return out


def rref(field: FieldSpec, rows: Iterable[Sequence[int]], n: int) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Reduced row echelon form over GF(d); pivots are 1 with zeros above and below."""
    work = [list(r) for r in rows]
    for r in work:
        if len(r) != n:
            raise LengthMismatch(f"generator of length {len(r)} in ambient dimension {n}")
    add, mul, neg, inv = field._add, field._mul, field._neg, field._inv
    pivots: list[int] = []
    top = 0
    for c in range(n):
        k = next((i for i in range(top, len(work)) if work[i][c]), None)
        if k is None:
            continue
        work[top], work[k] = work[k], work[top]
        s = inv[work[top][c]]
        prow = [mul[s][x] for x in work[top]]
        work[top] = prow
        for i in range(len(work)):
            if i != top and work[i][c]:
                f = neg[work[i][c]]
                work[i] = [add[x][mul[f][y]] for x, y in zip(work[i], prow)]
        pivots.append(c)
        top += 1
        if top == len(work):
            break
    return tuple(tuple(r) for r in work[:top]), tuple(pivots)


@dataclass(frozen=True)
class LinearSubspace:
    """An F_d-linear subspace of GF(d)^n held as a reduced echelon basis.

    Build instances with :meth:`span`; the constructor trusts its input.
    """

    field: FieldSpec
    n: int
    basis: tuple[Vector, ...] = ()

    @classmethod
    def span(cls, field: FieldSpec, n: int, gens: Iterable[Sequence[int]] = ()) -> LinearSubspace:
        gens = [field.check_vector(g, n) for g in gens]
        basis, _ = rref(field, gens, n)
        return cls(field, n, basis)

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> LinearSubspace:
        return cls(field, n, ())

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> LinearSubspace:
        return cls(field, n, tuple(field.unit(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.field.d**self.dim

    @functools.cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(row) if x) for row in self.basis)

    def _compatible(self, other: LinearSubspace) -> None:
        if self.field != other.field or self.n != other.n:
            raise SpecMismatch(f"{self.field}^{self.n} vs {other.field}^{other.n}")

    def reduce(self, v: Sequence[int]) -> Vector:
        """Canonical representative of the coset ``v + self``."""
        f = self.field
        if len(v) != self.n:
            raise LengthMismatch(f"vector of length {len(v)} in ambient dimension {self.n}")
        out = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = out[pc]
            if c:
                nc = f._neg[c]
                out = [f._add[x][f._mul[nc][y]] for x, y in zip(out, row)]
        return tuple(out)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    __contains__ = contains

    def issubspace(self, other: LinearSubspace) -> bool:
        self._compatible(other)
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other: LinearSubspace) -> bool:
        return self.issubspace(other)

    def __add__(self, other: LinearSubspace) -> LinearSubspace:
        self._compatible(other)
        return LinearSubspace.span(self.field, self.n, self.basis + other.basis)

    def extend(self, *vectors: Sequence[int]) -> LinearSubspace:
        return LinearSubspace.span(self.field, self.n, self.basis + tuple(tuple(v) for v in vectors))

    def orthogonal_complement(self) -> LinearSubspace:
        """``{v : inner(v, c) == 0 for all c}`` with the F_d-valued form."""
        f = self.field
        piv = self.pivots
        free = [c for c in range(self.n) if c not in piv]
        gens = []
        for fc in free:
            v = [0] * self.n
            v[fc] = 1
            for row, pc in zip(self.basis, piv):
                v[pc] = f._neg[row[fc]]
            gens.append(v)
        return LinearSubspace.span(f, self.n, gens)

    @functools.cached_property
    def perp(self) -> LinearSubspace:
        return self.orthogonal_complement()

    # -- F_p views, used for vectorised membership ---------------------------
    @functools.cached_property
    def fp_basis(self) -> np.ndarray:
        """F_p coordinates of ``{x^j * b}``: an F_p basis of the subspace."""
        f = self.field
        rows = [f.vscale(f.basis_element(j), b) for b in self.basis for j in range(f.m)]
        if not rows:
            return np.zeros((0, self.n * f.m), dtype=np.int64)
        return f.to_digits(np.array(rows, dtype=np.int64))

    @functools.cached_property
    def fp_check(self) -> np.ndarray:
        """Rows ``h`` with ``h . x == 0 (mod p)`` for all ``x`` iff ``x`` lies in the subspace."""
        return fp_nullspace(self.fp_basis, self.field.p, self.n * self.field.m)

    def contains_digits(self, dig: np.ndarray) -> np.ndarray:
        """Vectorised membership for F_p-coordinate rows ``(..., n*m)``."""
        dig = np.asarray(dig, dtype=np.int64)
        if self.fp_check.shape[0] == 0:
            return np.ones(dig.shape[:-1], dtype=bool)
        syn = (dig @ self.fp_check.T) % self.field.p
        return ~syn.any(axis=-1)

    def contains_many(self, vectors: np.ndarray) -> np.ndarray:
        return self.contains_digits(self.field.to_digits(np.asarray(vectors)))

    # -- enumeration ---------------------------------------------------------
    def element_digits(self, cap: int = ENUM_CAP) -> np.ndarray:
        if self.size > cap:
            raise ValueError(f"subspace has {self.size} elements, above cap {cap}")
        k = self.fp_basis.shape[0]
        p = self.field.p
        if k == 0:
            return np.zeros((1, self.n * self.field.m), dtype=np.int64)
        coef = np.indices((p,) * k, dtype=np.int64).reshape(k, -1).T
        return (coef @ self.fp_basis) % p

    def indices(self, cap: int = ENUM_CAP) -> np.ndarray:
        """Sorted vector indices of all elements."""
        dig = self.element_digits(cap)
        return np.sort(dig @ self.field.digit_weights(self.n))

    def elements(self, cap: int = ENUM_CAP) -> list[Vector]:
        """All elements in lexicographic order."""
        dig = self.element_digits(cap)
        vecs = self.field.from_digits(dig)
        order = np.argsort(dig @ self.field.digit_weights(self.n), kind="stable")
        return [tuple(int(x) for x in row) for row in vecs[order]]

    def weight(self, cap: int = ENUM_CAP) -> int:
        """Minimum Hamming weight over non-zero elements (full enumeration)."""
        if self.dim == 0:
            raise EmptyWeight("weight of the zero subspace is undefined")
        dig = self.element_digits(cap).reshape(-1, self.n, self.field.m)
        w = dig.any(axis=2).sum(axis=1)
        return int(w[w > 0].min())

    def __repr__(self) -> str:
        rows = ", ".join("".join(map(str, b)) for b in self.basis)
        return f"LinearSubspace({self.field}^{self.n}, <{rows}>)"


def subspace_from_generators(field: FieldSpec, n: int, gens: Iterable[Sequence[int]] = ()) -> LinearSubspace:
    return LinearSubspace.span(field, n, gens)


def contains(space: LinearSubspace, v: Sequence[int]) -> bool:
    return space.contains(v)


def orthogonal_complement(space: LinearSubspace) -> LinearSubspace:
    return space.orthogonal_complement()


def subspace_weight(space: LinearSubspace, cap: int = ENUM_CAP) -> int:
    return space.weight(cap)


def weight_outside(space: LinearSubspace, exclude: LinearSubspace, cap: int = ENUM_CAP) -> int:
    """Minimum weight over ``space \\ exclude``."""
    space._compatible(exclude)
    dig = space.element_digits(cap)
    keep = ~exclude.contains_digits(dig)
    if not keep.any():
        raise EmptyWeight("set difference is empty")
    w = dig[keep].reshape(-1, space.n, space.field.m).any(axis=2).sum(axis=1)
    return int(w.min())


def iter_subspaces(field: FieldSpec, n: int, dim: int) -> Iterator[LinearSubspace]:
    """Every ``dim``-dimensional subspace of GF(d)^n exactly once, via RREF shapes."""
    d = field.d
    for piv in itertools.combinations(range(n), dim):
        slots = [(r, c) for r, pc in enumerate(piv) for c in range(pc + 1, n) if c not in piv]
        for fill in itertools.product(range(d), repeat=len(slots)):
            rows = [[0] * n for _ in range(dim)]
            for r, pc in enumerate(piv):
                rows[r][pc] = 1
            for (r, c), x in zip(slots, fill):
                rows[r][c] = x
            yield LinearSubspace(field, n, tuple(tuple(r) for r in rows))


def random_subspace(field: FieldSpec, n: int, dim: int, rng: np.random.Generator) -> LinearSubspace:
    """A random subspace of exactly ``dim`` dimensions."""
    while True:
        gens = rng.integers(0, field.d, size=(dim, n))
        s = LinearSubspace.span(field, n, gens.tolist())
        if s.dim == dim:
            return s
