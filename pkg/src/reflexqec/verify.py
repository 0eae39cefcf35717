"""Correctability checks: graph rules, the stabilizer criterion, and a numeric oracle.

The graph rules compare the code's LUC graph with the error avoidance graph.
Each conjugate error ``D(a, b)`` contributes an oriented arc ``(a, b)``; an arc
is *common* when the LUC graph contains it (``b - a in C``, and for loops
``a in C1^perp``).  A conjugate error commutes with the stabilizer exactly when
its arc is common and ``b in C1^perp``, so the rules below look at the phase
coordinate ``b`` of each common arc.

Every symbolic rule is a sufficient condition.  A failing verdict means "not
certified"; :func:`kl_numeric` decides when the code fits in memory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._parallel import parallel_map
from .errors import DimensionCap, SpecMismatch, StructureMismatch, WorkCap
from .galois import FieldSpec, Vector
from .graphs import LucSpec, QeccGraph, build_avoidance_graph, build_luc_graph, edge_intersection, vector_literal
from .pauli import STATE_CAP, ErrorSet, apply_op, conjugate_set, gen_single_qudit
from .reflexive import (
    ReflexiveCode,
    ReflexiveStabilizer,
    build_codewords,
    centralizer_contains,
    stabilizer_contains,
)

KL_TOL = 1e-8
#: Default cap on the number of inner products evaluated by :func:`kl_numeric`.
WORK_CAP = 10**8
#: Cap on stored perturbed-state amplitudes (complex entries).
MEMORY_CAP = 2**26

RULE_ORDER = ("corollary", "main", "general", "symbolic", "numeric")


@dataclass(frozen=True)
class Witness:
    """An offending edge, loop, arc, conjugate error or inner product."""

    kind: str
    params: tuple[Vector, ...]
    detail: str = ""

    def format(self) -> str:
        text = f"{self.kind} " + " ".join(vector_literal(v) for v in self.params)
        return f"{text} {self.detail}".strip()


@dataclass(frozen=True)
class Verdict:
    correctable: bool
    rule: str
    witnesses: tuple[Witness, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.correctable and not self.witnesses:
            raise ValueError("a failing verdict needs at least one witness")

    def __bool__(self) -> bool:
        return self.correctable


def _check_pair(spec: LucSpec, E: ErrorSet) -> None:
    if spec.field != E.field or spec.n != E.n:
        raise SpecMismatch(f"code over {spec.field}^{spec.n}, errors over {E.field}^{E.n}")


def _verdict(rule: str, bad: list[Witness]) -> Verdict:
    return Verdict(not bad, rule, tuple(bad))


def _common_arcs(spec: LucSpec, G_E: QeccGraph) -> list[tuple[Vector, Vector]]:
    luc = build_luc_graph(spec)
    return sorted(arc for arc in G_E.arcs if luc.has_arc(*arc))


def check_corollary(spec: LucSpec, E: ErrorSet) -> Verdict:
    """Pass iff the only thing the two graphs share is the loop at zero."""
    _check_pair(spec, E)
    common = edge_intersection(build_avoidance_graph(E), build_luc_graph(spec))
    zero = spec.field.zero(spec.n)
    bad = [Witness("edge", e) for e in common.sorted_edges()]
    bad += [Witness("loop", (v,)) for v in common.sorted_loops() if v != zero]
    return _verdict("corollary", bad)


def check_main_theorem(spec: LucSpec, E: ErrorSet, literal: bool = False) -> Verdict:
    """Every common arc other than the zero loop must have ``b`` outside ``C1^perp``.

    With ``literal=True`` the weaker textbook form is evaluated instead: each
    common edge passes if either orientation ``(a, b)`` has ``a`` outside
    ``C1^perp`` or ``a = 0``.  That form accepts codes that fail the numeric
    check (for example ``C = F_2^n``, ``C1 = <e_n>`` against fully correlated
    noise) and is kept only for comparison.
    """
    _check_pair(spec, E)
    G_E = build_avoidance_graph(E)
    perp1 = spec.C1.perp
    zero = spec.field.zero(spec.n)
    if literal:
        return _literal_rule(spec, G_E, "main", lambda a, b: a == zero or not perp1.contains(a))
    bad = [
        Witness("loop" if a == b else "arc", (a, b) if a != b else (a,))
        for a, b in _common_arcs(spec, G_E)
        if (a, b) != (zero, zero) and perp1.contains(b)
    ]
    return _verdict("main", bad)


def check_general_theorem(spec: LucSpec, E: ErrorSet, literal: bool = False) -> Verdict:
    """Every common arc has ``b`` outside ``C1^perp`` or is a stabilizer parameter.

    A stabilizer parameter satisfies ``b in C^perp`` and ``a - b in C1``; for
    loops this reads ``L_E & C1^perp <= C^perp``.  ``literal=True`` evaluates
    the orientation-free textbook variant (``a`` outside ``C1^perp`` or
    ``a - b in C1`` for some orientation, plus the loop inclusion), which is
    not sufficient in general.
    """
    _check_pair(spec, E)
    f = spec.field
    G_E = build_avoidance_graph(E)
    perp, perp1, C1 = spec.C.perp, spec.C1.perp, spec.C1
    if literal:
        verdict = _literal_rule(
            spec, G_E, "general", lambda a, b: not perp1.contains(a) or C1.contains(f.vsub(a, b)), loops=False
        )
        bad = list(verdict.witnesses)
        bad += [Witness("loop", (v,)) for v in sorted(G_E.loops) if perp1.contains(v) and not perp.contains(v)]
        return _verdict("general", bad)
    bad = []
    for a, b in _common_arcs(spec, G_E):
        if not perp1.contains(b):
            continue
        if perp.contains(b) and C1.contains(f.vsub(a, b)):
            continue
        bad.append(Witness("loop", (a,)) if a == b else Witness("arc", (a, b)))
    return _verdict("general", bad)


def _literal_rule(spec: LucSpec, G_E: QeccGraph, rule: str, ok, loops: bool = True) -> Verdict:
    common = edge_intersection(G_E, build_luc_graph(spec))
    bad = [Witness("edge", (u, v)) for u, v in common.sorted_edges() if not (ok(u, v) or ok(v, u))]
    if loops:
        bad += [Witness("loop", (v,)) for v in common.sorted_loops() if not ok(v, v)]
    return _verdict(rule, bad)


def check_knill_symbolic(spec: LucSpec, E: ErrorSet) -> Verdict:
    """Every conjugate error lies in the stabilizer or fails to commute with it."""
    _check_pair(spec, E)
    S = ReflexiveStabilizer(spec)
    bad = [
        Witness("error", op.params, f"k={op.kappa}")
        for op in conjugate_set(E)
        if not stabilizer_contains(S, op) and centralizer_contains(S, op)
    ]
    return _verdict("symbolic", bad)


def check_single_qudit_corollary(spec: LucSpec) -> Verdict:
    """``wt(C) >= 3`` and ``wt(C1^perp) >= 2``; sufficient for all single-qudit errors."""
    wc = spec.C.weight()
    w1 = spec.C1.perp.weight()
    bad = []
    if wc < 3:
        bad.append(Witness("weight", (), f"wt(C)={wc}"))
    if w1 < 2:
        bad.append(Witness("weight", (), f"wt(C1perp)={w1}"))
    return _verdict("single_qudit", bad)


def single_qudit_closed_form(field: FieldSpec, n: int) -> QeccGraph:
    """Avoidance graph of all single-qudit errors from its closed-form description.

    Loops sit at zero and at every weight-1 vertex; simple edges join any two
    distinct weight-1 vertices and join zero to every vertex of weight 1 or 2.
    """
    zero = field.zero(n)
    w1 = [field.unit(n, i, al) for i in range(n) for al in range(1, field.d)]
    w2 = []
    for i in range(n):
        for j in range(i + 1, n):
            for x in range(1, field.d):
                for y in range(1, field.d):
                    v = [0] * n
                    v[i], v[j] = x, y
                    w2.append(tuple(v))
    edges = [(u, v) for idx, u in enumerate(w1) for v in w1[idx + 1 :]]
    edges += [(zero, v) for v in w1 + w2]
    return QeccGraph(field, n, edges, [zero, *w1])


def check_single_graph_structure(field: FieldSpec, n: int) -> QeccGraph:
    """Build the single-qudit avoidance graph and assert it matches the closed form."""
    if field.d**n > 2**20:
        raise DimensionCap(f"{field.d}**{n} vertices exceed cap")
    built = build_avoidance_graph(gen_single_qudit(n, field))
    closed = single_qudit_closed_form(field, n)
    if built != closed:
        extra = built.simple_edges ^ closed.simple_edges
        raise StructureMismatch(f"closed form differs from construction on {len(extra)} edges")
    return built


def kl_numeric(
    code: ReflexiveCode,
    E: ErrorSet,
    tol: float = KL_TOL,
    work_cap: int = WORK_CAP,
    cap: int = STATE_CAP,
) -> Verdict:
    """Brute-force Knill-Laflamme conditions on dense codewords.

    For every ordered pair ``(E1, E2)`` and codewords ``i != j`` the value
    ``<Phi_i|E1^dag E2|Phi_j>`` must vanish, and the diagonal values must agree
    with their mean.  Pairs are scanned in lexicographic order, so the first
    witness does not depend on threading.
    """
    spec = code.spec
    _check_pair(spec, E)
    words = code.codewords
    K, N = words.shape
    if N > cap:
        raise DimensionCap(f"state dimension {N} exceeds cap {cap}")
    m = len(E)
    if m * m * K * K > work_cap:
        raise WorkCap(f"{m * m * K * K} inner products exceed cap {work_cap}")
    if m * K * N > MEMORY_CAP:
        raise WorkCap(f"{m * K * N} stored amplitudes exceed cap {MEMORY_CAP}")
    moved = np.concatenate(parallel_map(lambda e: apply_op(e, words), E.ops), axis=0)
    gram = moved.conj() @ moved.T
    ops = E.ops
    off_mask = ~np.eye(K, dtype=bool)
    for s in range(m):
        for t in range(m):
            block = gram[s * K : (s + 1) * K, t * K : (t + 1) * K]
            off = np.abs(np.where(off_mask, block, 0))
            if K > 1 and off.max() >= tol:
                i, j = np.unravel_index(int(np.argmax(off)), off.shape)
                return _kl_fail(ops[s], ops[t], i, j, block[i, j])
            diag = np.diag(block)
            dev = np.abs(diag - diag.mean())
            if dev.max() >= tol:
                i = int(np.argmax(dev))
                return _kl_fail(ops[s], ops[t], i, i, diag[i])
    return Verdict(True, "numeric")


def _kl_fail(e1, e2, i: int, j: int, value: complex) -> Verdict:
    detail = f"i={i} j={j} value={value.real:.6g}{value.imag:+.6g}j"
    return Verdict(False, "numeric", (Witness("kl", (e1.a, e1.b, e2.a, e2.b), detail),))


def run_rules(
    spec: LucSpec,
    E: ErrorSet,
    rules: tuple[str, ...] = RULE_ORDER,
    code: Optional[ReflexiveCode] = None,
) -> list[Verdict]:
    """Run the requested rules in the fixed order of :data:`RULE_ORDER`.

    The numeric rule is skipped (not reported) when the code exceeds the caps.
    """
    out = []
    for rule in RULE_ORDER:
        if rule not in rules:
            continue
        if rule == "corollary":
            out.append(check_corollary(spec, E))
        elif rule == "main":
            out.append(check_main_theorem(spec, E))
        elif rule == "general":
            out.append(check_general_theorem(spec, E))
        elif rule == "symbolic":
            out.append(check_knill_symbolic(spec, E))
        else:
            try:
                word_code = code if code is not None else build_codewords(spec)
                out.append(kl_numeric(word_code, E))
            except (DimensionCap, WorkCap):
                continue
    return out
