"""Search for subspace pairs ``(C, C1)`` whose reflexive code corrects an error set.

The greedy strategy grows a connecting set ``C0`` that avoids every simple
edge of the avoidance graph, then tries small extensions ``C >= C0`` together
with small ``C1 <= C``.  The exhaustive strategy scans all pairs for small
ambient spaces and returns the optimum.  In both cases candidates are gathered
first and the winner is chosen by (largest k, smallest dim C1, lexicographic
bases), so the result does not depend on evaluation order.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._parallel import parallel_map
from .errors import ConfigError, ConsistencyError, NotFound
from .galois import FieldSpec, LinearSubspace, Vector, iter_subspaces
from .graphs import LucSpec, build_avoidance_graph
from .pauli import ErrorSet
from .verify import Verdict, check_corollary, check_general_theorem, check_main_theorem

EXHAUSTIVE_CAP = 2**12
#: Above this many vertices the greedy scan only offers weight <= 2 candidates.
GREEDY_SCAN_CAP = 2**16

_RULES = {
    "corollary": check_corollary,
    "main_theorem": check_main_theorem,
    "general_theorem": check_general_theorem,
}


@dataclass(frozen=True)
class SearchConfig:
    strategy: str = "greedy"
    max_n_for_exhaustive: int = EXHAUSTIVE_CAP
    require: str = "main_theorem"
    seed_generators: Optional[tuple[Vector, ...]] = None
    budget: int = 200_000
    max_extension: int = 2
    max_c1_dim: int = 2

    def __post_init__(self) -> None:
        if self.strategy not in ("greedy", "exhaustive"):
            raise ConfigError(f"unknown strategy {self.strategy!r}")
        if self.require not in _RULES:
            raise ConfigError(f"unknown rule {self.require!r}")
        if self.max_n_for_exhaustive > EXHAUSTIVE_CAP:
            raise ConfigError(f"exhaustive mode is limited to d**n <= {EXHAUSTIVE_CAP}")


@dataclass
class SearchResult:
    spec: LucSpec
    k: int
    certification: Verdict
    trace: list[str] = field(default_factory=list)


class _ArcTable:
    """Conjugate-error arcs as F_p digit arrays for vectorised certification."""

    def __init__(self, E: ErrorSet) -> None:
        f = E.field
        G = build_avoidance_graph(E)
        arcs = sorted(G.arcs)
        self.field = f
        self.n = E.n
        self.graph = G
        a = np.array([x for x, _ in arcs], dtype=np.int64).reshape(len(arcs), E.n)
        b = np.array([y for _, y in arcs], dtype=np.int64).reshape(len(arcs), E.n)
        self.a = f.to_digits(a)
        self.b = f.to_digits(b)
        self.diff = (self.b - self.a) % f.p
        self.trivial = ~(self.a.any(axis=1) | self.b.any(axis=1))
        self.loop = ~self.diff.any(axis=1)
        self.edge_diff = self.diff[~self.loop]

    def avoids_edges(self, C: LinearSubspace) -> bool:
        if self.edge_diff.shape[0] == 0:
            return True
        return not C.contains_digits(self.edge_diff).any()

    def certify(self, C: LinearSubspace, C1: LinearSubspace, rule: str) -> bool:
        common = C.contains_digits(self.diff) & ~self.trivial
        if not common.any():
            return True
        a1 = C1.perp.contains_digits(self.a)
        b1 = C1.perp.contains_digits(self.b)
        if rule == "corollary":
            bad = common & (~self.loop | a1)
        elif rule == "main_theorem":
            bad = common & b1
        else:
            in_s = C.perp.contains_digits(self.b) & C1.contains_digits((self.a - self.b) % self.field.p)
            bad = common & b1 & ~in_s
        return not bad.any()


def _key(C: LinearSubspace, C1: LinearSubspace) -> tuple:
    return (-(C.dim - C1.dim), C1.dim, C.basis, C1.basis)


def _candidates(field: FieldSpec, n: int) -> Iterator[Vector]:
    if field.d**n <= GREEDY_SCAN_CAP:
        for idx in range(1, field.d**n):
            yield field.vector(idx, n)
        return
    low = []
    for i in range(n):
        for x in range(1, field.d):
            low.append(field.unit(n, i, x))
        for j in range(i + 1, n):
            for x in range(1, field.d):
                for y in range(1, field.d):
                    v = [0] * n
                    v[i], v[j] = x, y
                    low.append(tuple(v))
    yield from sorted(low)


def greedy_connecting_set(table: _ArcTable, seed: tuple[Vector, ...] = ()) -> Optional[LinearSubspace]:
    """Single lexicographic pass admitting every vector whose span avoids all edges."""
    f, n = table.field, table.n
    C0 = LinearSubspace.span(f, n, seed)
    if not table.avoids_edges(C0):
        return None
    for v in _candidates(f, n):
        if C0.contains(v):
            continue
        trial = C0.extend(v)
        if table.avoids_edges(trial):
            C0 = trial
    return C0


def _subspaces_within(space: LinearSubspace, max_dim: int) -> Iterator[LinearSubspace]:
    """Subspaces of ``space`` of dimension ``0..max_dim`` (small cases)."""
    f, n = space.field, space.n
    yield LinearSubspace.zero(f, n)
    for j in range(1, min(max_dim, space.dim) + 1):
        for coeffs in iter_subspaces(f, space.dim, j):
            gens = []
            for row in coeffs.basis:
                v = f.zero(n)
                for c, bvec in zip(row, space.basis):
                    if c:
                        v = f.vadd(v, f.vscale(c, bvec))
                gens.append(v)
            yield LinearSubspace.span(f, n, gens)


def _extensions(C0: LinearSubspace, max_ext: int) -> list[LinearSubspace]:
    f, n = C0.field, C0.n
    seen = {C0.basis: C0}
    reps: dict[Vector, Vector] = {}
    for idx in range(1, f.d**n):
        v = f.vector(idx, n)
        key = C0.reduce(v)
        if any(key):
            lead = next(x for x in key if x)
            key = f.vscale(f.inv(lead), key)
            reps.setdefault(key, v)
    frontier = [C0]
    for _ in range(max_ext):
        nxt = []
        for C in frontier:
            for v in reps.values():
                if C.contains(v):
                    continue
                ext = C.extend(v)
                if ext.basis not in seen:
                    seen[ext.basis] = ext
                    nxt.append(ext)
        frontier = nxt
        if not frontier:
            break
    return sorted(seen.values(), key=lambda s: (s.dim, s.basis))


def heuristic_search(E: ErrorSet, cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """Find a certified ``(C, C1)`` maximizing the number of logical qudits."""
    f, n = E.field, E.n
    if not any(op.is_identity for op in E):
        raise ConsistencyError("error set must contain the identity")
    table = _ArcTable(E)
    G = table.graph
    trace = [f"S1 arcs={len(G.arcs)} edges={len(G.simple_edges)} loops={len(G.loops)}"]
    if cfg.strategy == "exhaustive":
        return _exhaustive(E, cfg, table, trace)

    seeds: list[tuple[Vector, ...]] = []
    if cfg.seed_generators is not None:
        seeds.append(tuple(cfg.seed_generators))
    else:
        seeds.append(())
        seeds.extend((f.unit(n, i),) for i in range(n))
    starts = parallel_map(lambda s: greedy_connecting_set(table, s), seeds)
    C0s: dict[tuple, LinearSubspace] = {}
    for seed, C0 in zip(seeds, starts):
        label = ",".join("".join(map(str, v)) for v in seed) or "none"
        if C0 is None:
            trace.append(f"S2 seed={label} rejected")
            continue
        trace.append(f"S2 seed={label} C0={_fmt(C0)} dim={C0.dim}")
        C0s.setdefault(C0.basis, C0)

    budget = cfg.budget
    best = None
    evaluated = 0
    for C0 in C0s.values():
        for C in _extensions(C0, cfg.max_extension):
            for C1 in _subspaces_within(C, cfg.max_c1_dim):
                if evaluated >= budget:
                    break
                if best is not None and _key(C, C1) >= best[0]:
                    continue
                evaluated += 1
                if table.certify(C, C1, cfg.require):
                    best = (_key(C, C1), C, C1)
    trace.append(f"S3 evaluated={evaluated} budget={budget}")
    if best is None:
        raise NotFound(f"no certified code within budget {budget}")
    return _finish(best[1], best[2], E, cfg, trace)


def _exhaustive(E: ErrorSet, cfg: SearchConfig, table: _ArcTable, trace: list[str]) -> SearchResult:
    f, n = E.field, E.n
    if f.d**n > cfg.max_n_for_exhaustive:
        raise ConfigError(f"exhaustive search needs d**n <= {cfg.max_n_for_exhaustive}, got {f.d**n}")
    evaluated = 0
    for k in range(n, -1, -1):
        for j in range(0, n - k + 1):
            found = []
            for C in iter_subspaces(f, n, k + j):
                for C1 in _subspaces_of_dim(C, j):
                    evaluated += 1
                    if evaluated > cfg.budget:
                        raise NotFound(f"exhaustive budget {cfg.budget} exhausted")
                    if table.certify(C, C1, cfg.require):
                        found.append((_key(C, C1), C, C1))
            if found:
                _, C, C1 = min(found, key=lambda t: t[0])
                trace.append(f"EX evaluated={evaluated} k={k} dimC1={j}")
                return _finish(C, C1, E, cfg, trace)
    raise NotFound("no certified code exists under the chosen rule")


def _subspaces_of_dim(space: LinearSubspace, j: int) -> Iterator[LinearSubspace]:
    if j == 0:
        yield LinearSubspace.zero(space.field, space.n)
        return
    for sub in _subspaces_within(space, j):
        if sub.dim == j:
            yield sub


def _finish(C: LinearSubspace, C1: LinearSubspace, E: ErrorSet, cfg: SearchConfig, trace: list[str]) -> SearchResult:
    spec = LucSpec(C, C1)
    verdict = _RULES[cfg.require](spec, E)
    if not verdict.correctable:
        raise ConsistencyError("vectorised certification disagrees with the rule checker")
    trace.append(f"SELECT C={_fmt(C)} C1={_fmt(C1)} k={spec.k} rule={cfg.require}")
    return SearchResult(spec, spec.k, verdict, trace)


def _fmt(S: LinearSubspace) -> str:
    return "<" + ",".join("".join(map(str, v)) for v in S.basis) + ">"


def minimal_physical_qudits(d: int) -> int:
    """Least ``n`` with ``d * (2 (d - 1) n + 1) <= d**n``.

    The count ``2 (d - 1) n + 1`` is the number of single-qudit errors; the
    bound is the usual packing argument for a code carrying one logical qudit.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    n = 1
    while d * (2 * (d - 1) * n + 1) > d**n:
        n += 1
    return n
