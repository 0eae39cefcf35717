"""Independent reference implementations used as test oracles.

Nothing here calls into the library's arithmetic: prime fields use plain
modular arithmetic and GF(4) uses a hand-written table for x^2 = x + 1.
"""

from __future__ import annotations

import itertools

import numpy as np

# GF(4) = {0, 1, x, x+1} encoded 0, 1, 2, 3
GF4_MUL = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
]


def add(d: int, x: int, y: int) -> int:
    return x ^ y if d == 4 else (x + y) % d


def mul(d: int, x: int, y: int) -> int:
    return GF4_MUL[x][y] if d == 4 else (x * y) % d


def star(d: int, x: int, y: int) -> int:
    """Coefficient dot product for the supported oracle fields."""
    if d == 4:
        return bin(x & y).count("1") % 2
    return (x * y) % d


def prime(d: int) -> int:
    return 2 if d == 4 else d


def site(d: int, a: int, b: int) -> np.ndarray:
    p = prime(d)
    w = np.exp(2j * np.pi / p)
    m = np.zeros((d, d), dtype=complex)
    for x in range(d):
        m[add(d, x, a), x] = w ** star(d, b, x)
    return m


def dense(d: int, a, b, kappa: int = 0) -> np.ndarray:
    p = prime(d)
    r = 4 if p == 2 else p
    out = np.array([[np.exp(2j * np.pi * kappa / r)]])
    for ai, bi in zip(a, b):
        out = np.kron(out, site(d, ai, bi))
    return out


def identify(d: int, n: int, mat: np.ndarray):
    """Parameters ``(a, b)`` of the operator proportional to ``mat``."""
    for a in itertools.product(range(d), repeat=n):
        for b in itertools.product(range(d), repeat=n):
            ref = dense(d, a, b)
            ratio = np.vdot(ref, mat) / ref.shape[0]
            if abs(abs(ratio) - 1) < 1e-9 and np.allclose(mat, ratio * ref, atol=1e-9):
                return a, b
    raise AssertionError("matrix is not a scaled Pauli operator")


def span(d: int, n: int, gens) -> set[tuple[int, ...]]:
    """All F_d-linear combinations of ``gens``."""
    out = set()
    gens = list(gens)
    for coeffs in itertools.product(range(d), repeat=len(gens)):
        v = [0] * n
        for c, g in zip(coeffs, gens):
            for i in range(n):
                v[i] = add(d, v[i], mul(d, c, g[i]))
        out.add(tuple(v))
    if not gens:
        out.add((0,) * n)
    return out


def inner(d: int, u, v) -> int:
    acc = 0
    for x, y in zip(u, v):
        acc = add(d, acc, mul(d, x, y))
    return acc


def perp(d: int, n: int, space: set) -> set[tuple[int, ...]]:
    return {v for v in itertools.product(range(d), repeat=n) if all(inner(d, v, c) == 0 for c in space)}


def components(vertices, edges) -> list[set]:
    adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, comps = set(), []
    for s in vertices:
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            u = stack.pop()
            for w in adj[u] - comp:
                comp.add(w)
                stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps
