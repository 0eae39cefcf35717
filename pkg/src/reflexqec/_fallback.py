"""Pure numpy versions of the compiled kernels, with identical semantics."""

from __future__ import annotations

import numpy as np

_CHUNK = 2**20


def _digits(x: np.ndarray, p: int, L: int) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    return (x[..., None] // (p ** np.arange(L, dtype=np.int64))) % p


def _undigits(dig: np.ndarray, p: int, L: int) -> np.ndarray:
    return dig @ (p ** np.arange(L, dtype=np.int64))


def _add(x: np.ndarray, y: np.ndarray, p: int, L: int) -> np.ndarray:
    # digit loop keeps memory at the broadcast shape rather than shape * L
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if p == 2:
        return x ^ y
    out = np.zeros(np.broadcast_shapes(x.shape, y.shape), dtype=np.int64)
    scale = 1
    for _ in range(L):
        out += ((x // scale + y // scale) % p) * scale
        scale *= p
    return out


def _neg(x: np.ndarray, p: int, L: int) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    if p == 2:
        return x.copy()
    out = np.zeros_like(x)
    scale = 1
    for _ in range(L):
        out += ((-(x // scale)) % p) * scale
        scale *= p
    return out


def index_add(xs: np.ndarray, y: int, p: int, L: int) -> np.ndarray:
    return _add(np.asarray(xs, dtype=np.int64), np.int64(y), p, L)


def pauli_apply(states: np.ndarray, a: int, b: int, p: int, L: int, wpow: np.ndarray, phase: complex) -> np.ndarray:
    N = states.shape[1]
    xs = np.arange(N, dtype=np.int64)
    dig = _digits(xs, p, L)
    target = _undigits((dig + _digits(np.int64(a), p, L)) % p, p, L)
    expo = (dig @ _digits(np.int64(b), p, L)) % p
    out = np.empty_like(states, dtype=np.complex128)
    out[:, target] = states * (phase * wpow[expo])[None, :]
    return out


def cayley_components(N: int, conn: np.ndarray, p: int, L: int) -> np.ndarray:
    labels = np.full(N, -1, dtype=np.int64)
    conn = np.asarray(conn, dtype=np.int64)
    comp = 0
    for s in range(N):
        if labels[s] >= 0:
            continue
        labels[s] = comp
        frontier = np.array([s], dtype=np.int64)
        step = max(1, _CHUNK // max(1, conn.size))
        while frontier.size:
            found = []
            for lo in range(0, frontier.size, step):
                nb = _add(frontier[lo : lo + step, None], conn[None, :], p, L).ravel()
                nb = np.unique(nb[labels[nb] < 0])
                labels[nb] = comp
                found.append(nb)
            frontier = np.concatenate(found) if found else frontier[:0]
        comp += 1
    return labels


def cayley_complete(labels: np.ndarray, adjacent: np.ndarray, p: int, L: int) -> bool:
    adjacent = np.asarray(adjacent, dtype=bool)
    for lab in np.unique(labels):
        members = np.flatnonzero(labels == lab)
        if members.size < 2:
            continue
        neg = _neg(members, p, L)
        step = max(1, _CHUNK // members.size)
        for lo in range(0, members.size, step):
            rows = np.arange(lo, min(lo + step, members.size))
            diff = _add(members[None, :], neg[rows, None], p, L)
            upper = np.arange(members.size)[None, :] > rows[:, None]
            if not adjacent[diff[upper]].all():
                return False
    return True


def luc_edges(N: int, conn: np.ndarray, p: int, L: int) -> np.ndarray:
    conn = np.asarray(conn, dtype=np.int64)
    xs = np.arange(N, dtype=np.int64)
    w = _add(xs[:, None], conn[None, :], p, L)
    u = np.broadcast_to(xs[:, None], w.shape)
    keep = u < w
    out = np.stack([u[keep], w[keep]], axis=1)
    if out.size == 0:
        return np.zeros((0, 2), dtype=np.int64)
    order = np.lexsort((out[:, 1], out[:, 0]))
    return out[order]
