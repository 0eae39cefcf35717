"""Error avoidance graphs, linear Cayley (LUC) graphs and their edge algebra.

Both kinds of graph live on the vertex set GF(d)^n.  Simple edges are stored as
pairs ``(u, v)`` with ``u < v`` lexicographically; loops are stored separately.
An avoidance graph also keeps its *arcs*: the ordered parameter pairs
``(a, b)`` of the conjugate errors, which the correctability rules need.
A LUC graph is held implicitly through its :class:`LucSpec` and only
materializes edges on request.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import ConsistencyError, DimensionCap, SpecMismatch, StructureMismatch
from .galois import FieldSpec, LinearSubspace, Vector
from .pauli import ErrorSet, conjugate_set

#: Vertex cap for anything that touches every vertex.
VERTEX_CAP = 2**20
#: Vertex cap for traversal cross-checks and DOT export.
TRAVERSAL_CAP = 4096
#: Cap on the number of materialized simple edges.
EDGE_CAP = 2**22

Edge = tuple[Vector, Vector]


@dataclass(frozen=True)
class LucSpec:
    """A pair of subspaces ``C1 <= C`` of GF(d)^n."""

    C: LinearSubspace
    C1: LinearSubspace

    def __post_init__(self) -> None:
        if self.C.field != self.C1.field or self.C.n != self.C1.n:
            raise ConsistencyError("C and C1 must share field and length")
        if not self.C1.issubspace(self.C):
            raise ConsistencyError("C1 is not contained in C")

    @classmethod
    def from_generators(cls, field: FieldSpec, n: int, C_gens, C1_gens=()) -> LucSpec:
        return cls(LinearSubspace.span(field, n, C_gens), LinearSubspace.span(field, n, C1_gens))

    @property
    def field(self) -> FieldSpec:
        return self.C.field

    @property
    def n(self) -> int:
        return self.C.n

    @property
    def k(self) -> int:
        return self.C.dim - self.C1.dim


def _canon(u: Vector, v: Vector) -> Edge:
    return (u, v) if u < v else (v, u)


class QeccGraph:
    """Graph on GF(d)^n with simple edges, loops and (optionally) oriented arcs."""

    def __init__(
        self,
        field: FieldSpec,
        n: int,
        simple_edges=(),
        loops=(),
        arcs=(),
        spec: Optional[LucSpec] = None,
    ) -> None:
        self.field = field
        self.n = n
        self.spec = spec
        if spec is None:
            self._edges = frozenset(_canon(u, v) for u, v in simple_edges)
            self._loops = frozenset(loops)
            if any(u == v for u, v in self._edges):
                raise ValueError("a simple edge cannot join a vertex to itself")
        else:
            self._edges = None
            self._loops = None
        self.arcs: frozenset[Edge] = frozenset(arcs)

    # -- membership ----------------------------------------------------------
    def has_edge(self, u: Vector, v: Vector) -> bool:
        if u == v:
            return False
        if self.spec is not None:
            return self.spec.C.contains(self.field.vsub(v, u))
        return _canon(u, v) in self._edges

    def has_loop(self, v: Vector) -> bool:
        if self.spec is not None:
            return self.spec.C1.perp.contains(v)
        return v in self._loops

    def has_arc(self, a: Vector, b: Vector) -> bool:
        return self.has_loop(a) if a == b else self.has_edge(a, b)

    # -- materialized views --------------------------------------------------
    @property
    def simple_edges(self) -> frozenset[Edge]:
        if self._edges is None:
            self._edges = frozenset(map(tuple, self._luc_edge_vectors()))
        return self._edges

    @property
    def loops(self) -> frozenset[Vector]:
        if self._loops is None:
            perp = self.spec.C1.perp
            if perp.size > VERTEX_CAP:
                raise DimensionCap(f"{perp.size} loops exceed cap {VERTEX_CAP}")
            self._loops = frozenset(perp.elements())
        return self._loops

    def _luc_edge_vectors(self) -> list[Edge]:
        f, n, C = self.field, self.n, self.spec.C
        N = f.d**n
        if N > VERTEX_CAP:
            raise DimensionCap(f"{N} vertices exceed cap {VERTEX_CAP}")
        if N * (C.size - 1) // 2 > EDGE_CAP:
            raise DimensionCap(f"LUC graph has more than {EDGE_CAP} edges")
        conn = C.indices()[1:]
        pairs = kernels.luc_edges(N, conn, f.p, n * f.m)
        return [(f.vector(int(u), n), f.vector(int(v), n)) for u, v in pairs]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.simple_edges)

    def sorted_loops(self) -> list[Vector]:
        return sorted(self.loops)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QeccGraph):
            return NotImplemented
        return (
            self.field == other.field
            and self.n == other.n
            and self.simple_edges == other.simple_edges
            and self.loops == other.loops
        )

    def __repr__(self) -> str:
        kind = "LUC" if self.spec is not None else "explicit"
        return f"QeccGraph({kind}, {self.field}^{self.n})"


def build_avoidance_graph(E: ErrorSet) -> QeccGraph:
    """Edges from the parameters of every conjugate error, phases ignored."""
    arcs = {op.params for op in conjugate_set(E)}
    zero = E.field.zero(E.n)
    arcs.add((zero, zero))
    edges = [(a, b) for a, b in arcs if a != b]
    loops = [a for a, b in arcs if a == b]
    return QeccGraph(E.field, E.n, edges, loops, arcs)


def build_luc_graph(spec: LucSpec) -> QeccGraph:
    """Edges ``{a, a + c}`` for ``c`` in ``C \\ {0}``; loops on ``C1^perp``."""
    N = spec.field.d**spec.n
    if N > VERTEX_CAP:
        raise DimensionCap(f"{N} vertices exceed cap {VERTEX_CAP}")
    return QeccGraph(spec.field, spec.n, spec=spec)


def _luc_labels(spec: LucSpec) -> np.ndarray:
    f = spec.field
    N = f.d**spec.n
    conn = spec.C.indices()[1:]
    return kernels.cayley_components(N, conn, f.p, spec.n * f.m)


def component_of(G: QeccGraph, v: Vector) -> set[Vector]:
    """Connected component of ``v`` through simple edges."""
    f, n = G.field, G.n
    v = f.check_vector(v, n)
    if G.spec is not None:
        N = f.d**n
        if N > VERTEX_CAP:
            raise DimensionCap(f"{N} vertices exceed cap {VERTEX_CAP}")
        labels = _luc_labels(G.spec)
        members = np.flatnonzero(labels == labels[f.index(v)])
        return {f.vector(int(i), n) for i in members}
    adj: dict[Vector, list[Vector]] = {}
    for a, b in G.simple_edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in adj.get(u, ()):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def traverse_components(spec: LucSpec) -> tuple[int, bool]:
    """Component count by traversal and whether every component is complete."""
    f = spec.field
    N = f.d**spec.n
    if N > VERTEX_CAP:
        raise DimensionCap(f"{N} vertices exceed cap {VERTEX_CAP}")
    labels = _luc_labels(spec)
    adjacent = np.zeros(N, dtype=np.uint8)
    adjacent[spec.C.indices()[1:]] = 1
    complete = kernels.cayley_complete(labels, adjacent, f.p, spec.n * f.m)
    return int(labels.max()) + 1, bool(complete)


def count_components(spec: LucSpec) -> int:
    """``d**(n - dim C)``, cross-checked by traversal for small graphs."""
    count = spec.field.d ** (spec.n - spec.C.dim)
    if spec.field.d**spec.n <= TRAVERSAL_CAP:
        seen, complete = traverse_components(spec)
        if seen != count or not complete:
            raise StructureMismatch(f"traversal found {seen} components (complete={complete}), expected {count}")
    return count


def _same_space(G1: QeccGraph, G2: QeccGraph) -> None:
    if G1.field != G2.field or G1.n != G2.n:
        raise SpecMismatch(f"{G1.field}^{G1.n} vs {G2.field}^{G2.n}")


def edge_intersection(G1: QeccGraph, G2: QeccGraph) -> QeccGraph:
    """Common simple edges, loops and arcs."""
    _same_space(G1, G2)
    if G1.spec is not None and G2.spec is None:
        G1, G2 = G2, G1
    if G1.spec is None:
        edges = [e for e in G1.simple_edges if G2.has_edge(*e)]
        loops = [v for v in G1.loops if G2.has_loop(v)]
    else:
        edges = G1.simple_edges & G2.simple_edges
        loops = G1.loops & G2.loops
    arcs = [arc for arc in G1.arcs | G2.arcs if G1.has_arc(*arc) and G2.has_arc(*arc)]
    return QeccGraph(G1.field, G1.n, edges, loops, arcs)


def vector_literal(v: Vector) -> str:
    return ",".join(str(x) for x in v)


def export_dot(G: QeccGraph, highlight: Optional[QeccGraph] = None, name: str = "G") -> str:
    """Undirected DOT text; loops drawn as double circles, highlights in red."""
    f, n = G.field, G.n
    N = f.d**n
    if N > TRAVERSAL_CAP:
        raise DimensionCap(f"{N} vertices exceed DOT cap {TRAVERSAL_CAP}")
    hl_edges = highlight.simple_edges if highlight is not None else frozenset()
    hl_loops = highlight.loops if highlight is not None else frozenset()
    lines = [f"graph {name} {{"]
    for i in range(N):
        v = f.vector(i, n)
        attrs = [f'label="{vector_literal(v)}"']
        if G.has_loop(v):
            attrs.append("peripheries=2")
        if v in hl_loops:
            attrs.append("color=red")
        lines.append(f"  v{i} [{', '.join(attrs)}];")
    for u, v in G.sorted_edges():
        style = " [color=red]" if (u, v) in hl_edges else ""
        lines.append(f"  v{f.index(u)} -- v{f.index(v)}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
