"""Compare the compiled kernels with the numpy fallback.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each row reports the best wall time of both backends and checks that their
outputs agree before timing.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from reflexqec import kernels
from reflexqec.galois import FieldSpec, random_subspace


def _best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def _cases():
    rng = np.random.default_rng(0)
    for p, m, n, dim in [(2, 1, 14, 6), (3, 1, 8, 3), (2, 2, 7, 3), (5, 1, 6, 2)]:
        f = FieldSpec(p, m)
        N = f.d**n
        L = n * m
        C = random_subspace(f, n, dim, rng)
        conn = np.ascontiguousarray(C.indices()[1:], dtype=np.int64)
        states = rng.normal(size=(4, N)) + 1j * rng.normal(size=(4, N))
        w = np.exp(2j * np.pi * np.arange(p) / p)
        a, b = (int(x) for x in rng.integers(0, N, 2))
        adjacent = np.zeros(N, dtype=np.uint8)
        adjacent[conn] = 1
        label = f"GF({p}^{m})^{n}"
        yield label, "pauli_apply", lambda be: be.pauli_apply(states, a, b, p, L, w, 1.0 + 0j)
        yield label, "cayley_components", lambda be: be.cayley_components(N, conn, p, L)
        yield label, "luc_edges", lambda be: be.luc_edges(N, conn, p, L)
        labels = kernels.get_backend("numpy").cayley_components(N, conn, p, L)
        yield label, "cayley_complete", lambda be: be.cayley_complete(labels, adjacent, p, L)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if "cython" not in kernels.available_backends():
        raise SystemExit("compiled kernels are not built; run: python3 setup.py build_ext --inplace")
    cy, nu = kernels.get_backend("cython"), kernels.get_backend("numpy")
    print(f"{'space':<14} {'kernel':<18} {'cython [ms]':>12} {'numpy [ms]':>12} {'speedup':>8}")
    for label, name, call in _cases():
        got, want = np.asarray(call(cy)), np.asarray(call(nu))
        if not np.allclose(got, want, rtol=0, atol=1e-12):
            raise SystemExit(f"{name} on {label}: backends disagree")
        t_cy = _best(lambda: call(cy), args.repeat)
        t_nu = _best(lambda: call(nu), args.repeat)
        print(f"{label:<14} {name:<18} {1e3 * t_cy:12.3f} {1e3 * t_nu:12.3f} {t_nu / t_cy:8.1f}x")


if __name__ == "__main__":
    main()
