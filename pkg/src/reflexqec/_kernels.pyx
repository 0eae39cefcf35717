# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over vector indices.

Every kernel works on integer indices in ``range(p**L)``; base-p digits of an
index are F_p coordinates, so vector addition is digit-wise addition mod p and
the phase form is the digit-wise dot product mod p.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t
from libc.stdlib cimport qsort

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef int _cmp_int64(const void* a, const void* b) noexcept nogil:
    cdef int64_t x = (<const int64_t*>a)[0], y = (<const int64_t*>b)[0]
    return (x > y) - (x < y)


# For p = 2 the digits are bits: addition is XOR, negation is the identity and
# the dot product is the parity of the common bits.
cdef inline int64_t _add(int64_t x, int64_t y, int64_t p, int L) noexcept nogil:
    if p == 2:
        return x ^ y
    cdef int64_t out = 0, scale = 1
    cdef int j
    for j in range(L):
        out += ((x % p + y % p) % p) * scale
        scale *= p
        x //= p
        y //= p
    return out


cdef inline int64_t _neg(int64_t x, int64_t p, int L) noexcept nogil:
    if p == 2:
        return x
    cdef int64_t out = 0, scale = 1
    cdef int j
    for j in range(L):
        out += ((p - x % p) % p) * scale
        scale *= p
        x //= p
    return out


cdef inline int64_t _dot(int64_t x, int64_t y, int64_t p, int L) noexcept nogil:
    if p == 2:
        return __builtin_popcountll(<unsigned long long>(x & y)) & 1
    cdef int64_t acc = 0
    cdef int j
    for j in range(L):
        acc += (x % p) * (y % p)
        x //= p
        y //= p
    return acc % p


def index_add(cnp.int64_t[:] xs, int64_t y, int64_t p, int L):
    cdef Py_ssize_t i, n = xs.shape[0]
    out = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[:] o = out
    with nogil:
        for i in range(n):
            o[i] = _add(xs[i], y, p, L)
    return out


def pauli_apply(cnp.complex128_t[:, :] states, int64_t a, int64_t b, int64_t p, int L,
                cnp.complex128_t[:] wpow, cnp.complex128_t phase):
    """``out[k, x + a] = phase * w**(b.x) * states[k, x]``."""
    cdef Py_ssize_t K = states.shape[0], N = states.shape[1]
    cdef Py_ssize_t k, x, t
    cdef cnp.complex128_t f
    out = np.empty((K, N), dtype=np.complex128)
    cdef cnp.complex128_t[:, :] o = out
    with nogil:
        for x in range(N):
            t = _add(x, a, p, L)
            f = phase * wpow[_dot(b, x, p, L)]
            for k in range(K):
                o[k, t] = f * states[k, x]
    return out


def cayley_components(int64_t N, cnp.int64_t[:] conn, int64_t p, int L):
    """Component labels of the graph with edges ``{x, x + c}``, ``c`` in ``conn``."""
    labels = np.full(N, -1, dtype=np.int64)
    cdef cnp.int64_t[:] lab = labels
    stack_arr = np.empty(N, dtype=np.int64)
    cdef cnp.int64_t[:] stack = stack_arr
    cdef Py_ssize_t M = conn.shape[0]
    cdef Py_ssize_t s, top, i
    cdef int64_t comp = 0, v, w
    with nogil:
        for s in range(N):
            if lab[s] >= 0:
                continue
            lab[s] = comp
            stack[0] = s
            top = 1
            while top > 0:
                top -= 1
                v = stack[top]
                for i in range(M):
                    w = _add(v, conn[i], p, L)
                    if lab[w] < 0:
                        lab[w] = comp
                        stack[top] = w
                        top += 1
            comp += 1
    return labels


def cayley_complete(cnp.int64_t[:] labels, cnp.uint8_t[:] adjacent, int64_t p, int L):
    """True iff every pair in a common component differs by an ``adjacent`` index."""
    cdef Py_ssize_t N = labels.shape[0]
    order = np.argsort(labels, kind="stable")
    cdef cnp.int64_t[:] od = order
    cdef Py_ssize_t lo = 0, hi, i, j
    cdef int64_t u, v
    cdef bint ok = True
    with nogil:
        while lo < N and ok:
            hi = lo
            while hi < N and labels[od[hi]] == labels[od[lo]]:
                hi += 1
            for i in range(lo, hi):
                u = _neg(od[i], p, L)
                for j in range(i + 1, hi):
                    v = od[j]
                    if not adjacent[_add(v, u, p, L)]:
                        ok = False
                        break
                if not ok:
                    break
            lo = hi
    return bool(ok)


def luc_edges(int64_t N, cnp.int64_t[:] conn, int64_t p, int L):
    """Unordered pairs ``(x, x + c)`` with ``x < x + c``, sorted."""
    cdef Py_ssize_t M = conn.shape[0]
    cdef Py_ssize_t x, i, start, cnt = 0
    cdef int64_t w
    buf = np.empty((N * M, 2), dtype=np.int64)
    row_arr = np.empty(max(M, 1), dtype=np.int64)
    cdef cnp.int64_t[:, :] b = buf
    cdef cnp.int64_t[:] row = row_arr
    with nogil:
        # rows come out in increasing x; only the partners need sorting
        for x in range(N):
            start = 0
            for i in range(M):
                w = _add(x, conn[i], p, L)
                if x < w:
                    row[start] = w
                    start += 1
            if start > 1:
                qsort(&row[0], start, sizeof(int64_t), _cmp_int64)
            for i in range(start):
                b[cnt, 0] = x
                b[cnt, 1] = row[i]
                cnt += 1
    return buf[:cnt].copy()
