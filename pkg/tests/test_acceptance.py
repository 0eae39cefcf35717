"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line in :data:`RESULTS`; the lines are
printed as the test runs and again in the terminal summary.
"""

from __future__ import annotations

import itertools
import os
import subprocess
import sys
import time

import numpy as np
from conftest import CORPUS, dw1_errors, dw1_spec, ex2_spec, four_state_spec

import oracles
from reflexqec.cssbridge import asymptotic_rate, phi_map, phi_on_stabilizer, symplectic_preserved
from reflexqec.galois import FieldSpec, LinearSubspace, random_subspace
from reflexqec.graphs import (
    LucSpec,
    build_avoidance_graph,
    build_luc_graph,
    component_of,
    count_components,
    export_dot,
    traverse_components,
)
from reflexqec.pauli import ErrorOp, ErrorSet, gen_fully_correlated, gen_single_qudit, op_commutes, op_inverse, op_matrix
from reflexqec.reflexive import ReflexiveStabilizer, build_codewords, logical_dimension
from reflexqec.search import minimal_physical_qudits
from reflexqec.verify import (
    check_corollary,
    check_general_theorem,
    check_knill_symbolic,
    check_main_theorem,
    check_single_qudit_corollary,
    kl_numeric,
    single_qudit_closed_form,
)

RESULTS: list[str] = []


def _record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _field(d: int) -> FieldSpec:
    return FieldSpec(2, 2) if d == 4 else FieldSpec(d)


def test_criterion_01_luc_structure():
    rng = np.random.default_rng(1)
    shapes = [(2, n) for n in range(1, 13)] + [(3, n) for n in range(1, 8)] + [(4, n) for n in range(1, 7)]
    failures = []
    for trial in range(50):
        d, n = shapes[int(rng.integers(0, len(shapes)))]
        f = _field(d)
        C = random_subspace(f, n, int(rng.integers(0, n + 1)), rng)
        spec = LucSpec(C, LinearSubspace.zero(f, n))
        count, complete = traverse_components(spec)
        if count != d ** (n - C.dim) or not complete or count_components(spec) != count:
            failures.append((d, n, C.dim, count, complete))
    _record(1, "LUC components counted by traversal equal d^(n - dim C), all complete", not failures, f"{50 - len(failures)}/50")


def test_criterion_02_three_triangles():
    f = FieldSpec(3)
    spec = LucSpec.from_generators(f, 2, [(1, 1)])
    G = build_luc_graph(spec)
    comps = {frozenset(component_of(G, v)) for v in itertools.product(range(3), repeat=2)}
    dot = export_dot(G)
    nodes, edges = dot.count("label="), dot.count(" -- ")
    ok = len(comps) == 3 and all(len(c) == 3 for c in comps) and count_components(spec) == 3 and (nodes, edges) == (9, 9)
    _record(2, "C = {00,11,22} gives three 3-vertex components; DOT has 9 nodes and 9 edges", ok, f"{len(comps)} components, {nodes} nodes, {edges} edges")


def test_criterion_03_dw1_end_to_end():
    E, spec = dw1_errors(), dw1_spec()
    G = build_avoidance_graph(E)
    v = lambda s: tuple(int(c) for c in s)  # noqa: E731
    graph_ok = G.simple_edges == {(v("010"), v("100")), (v("011"), v("101"))} and G.loops == {v("000"), v("110"), v("001")}
    rules = [check(spec, E).correctable for check in (check_corollary, check_main_theorem, check_general_theorem, check_knill_symbolic)]
    code = build_codewords(spec)
    numeric = kl_numeric(code, E, tol=1e-8)
    ok = graph_ok and all(rules) and numeric.correctable and code.codewords.shape == (2, 8)
    _record(3, "dw1 graph exact, four symbolic rules and numeric KL pass", ok, f"graph={graph_ok} rules={rules} numeric={numeric.correctable}")


def test_criterion_04_fully_correlated_optimum():
    parts = []
    for n in (3, 4, 5, 6):
        spec = ex2_spec(n)
        E = gen_fully_correlated(n)
        certified = check_main_theorem(spec, E).correctable
        parts.append((f"n={n} main", certified and logical_dimension(spec) == n - 1))
    for n in (3, 4, 5):
        spec = ex2_spec(n)
        E = gen_fully_correlated(n)
        code = build_codewords(spec)
        gram = np.abs(code.codewords.conj() @ code.codewords.T - np.eye(len(code))).max()
        words_ok = len(code) == 2 ** (n - 1) and gram < 1e-9
        parts.append((f"n={n} codewords", words_ok))
        parts.append((f"n={n} numeric", kl_numeric(code, E).correctable))
    failed = [name for name, ok in parts if not ok]
    _record(
        4,
        "C = F_2^n, C1 = <e_n> certifies under the main rule with k = n-1 and passes numeric KL",
        not failed,
        "failed: " + ", ".join(failed) if failed else "all parts",
    )


def test_criterion_05_four_state_code():
    spec = four_state_spec()
    E = gen_single_qudit(4, spec.field)
    start = time.perf_counter()
    code = build_codewords(spec)
    numeric = kl_numeric(code, E, tol=1e-8)
    elapsed = time.perf_counter() - start
    checks = {
        "minimal_n": minimal_physical_qudits(4) == 4,
        "wt(C)": spec.C.weight() == 3,
        "wt(C1perp)": spec.C1.perp.weight() >= 2,
        "corollary": check_single_qudit_corollary(spec).correctable,
        "codewords": code.codewords.shape == (4, 256),
        "errors": len(E) == 25,
        "numeric": numeric.correctable,
        "time": elapsed < 60,
    }
    failed = [k for k, ok in checks.items() if not ok]
    _record(5, "four-state code over GF(4) corrects all 25 single-qudit errors", not failed, f"{elapsed:.2f}s" + (f", failed {failed}" if failed else ""))


def test_criterion_06_single_error_graph():
    mismatches = []
    for d, n in [(2, 3), (3, 2), (4, 2)]:
        f = _field(d)
        E = gen_single_qudit(n, f)
        mats = [oracles.dense(d, e.a, e.b) for e in E]
        params = {oracles.identify(d, n, np.linalg.inv(m1) @ m2) for m1 in mats for m2 in mats}
        closed = single_qudit_closed_form(f, n)
        built = build_avoidance_graph(E)
        loops = {a for a, b in params if a == b}
        edges = {tuple(sorted((a, b))) for a, b in params if a != b}
        if not (closed.loops == built.loops == loops and closed.simple_edges == built.simple_edges == edges):
            mismatches.append((d, n))
    _record(6, "closed-form single-error graph equals brute-force conjugate enumeration", not mismatches, f"mismatches {mismatches}")


def test_criterion_07_soundness_chain():
    rng = np.random.default_rng(77)
    f = FieldSpec(2)
    counterexamples = []
    for trial in range(200):
        n = int(rng.integers(1, 5))
        C = random_subspace(f, n, int(rng.integers(0, n + 1)), rng)
        C1 = LinearSubspace.span(f, n, [c for c in C.basis if rng.random() < 0.4])
        spec = LucSpec(C, C1)
        ops = [ErrorOp(f, tuple(rng.integers(0, 2, n)), tuple(rng.integers(0, 2, n)), int(rng.integers(0, 4))) for _ in range(3)]
        E = ErrorSet(f, n, ops)
        main = check_main_theorem(spec, E).correctable
        gen = check_general_theorem(spec, E).correctable
        sym = check_knill_symbolic(spec, E).correctable
        num = kl_numeric(build_codewords(spec), E).correctable
        if (main and not gen) or gen != sym or (sym and not num):
            counterexamples.append(trial)
    _record(7, "main => general <=> symbolic => numeric on 200 random instances", not counterexamples, f"{len(counterexamples)} counterexamples")


def _pauli_agrees(e1: ErrorOp, e2: ErrorOp) -> bool:
    d = e1.field.d
    m1 = oracles.dense(d, e1.a, e1.b, e1.kappa)
    m2 = oracles.dense(d, e2.a, e2.b, e2.kappa)
    prod = e1 * e2
    inv = op_inverse(e1)
    return (
        np.abs(op_matrix(prod) - m1 @ m2).max() < 1e-12
        and np.abs(op_matrix(inv) @ m1 - np.eye(m1.shape[0])).max() < 1e-12
        and op_commutes(e1, e2) == (np.abs(m1 @ m2 - m2 @ m1).max() < 1e-12)
    )


def test_criterion_08_pauli_oracle():
    f = FieldSpec(2)
    bad = 0
    total = 0
    for n in (1, 2):
        vecs = list(itertools.product(range(2), repeat=n))
        ops = [ErrorOp(f, a, b, k) for a in vecs for b in vecs for k in range(4)]
        for e1, e2 in itertools.product(ops, ops):
            total += 1
            bad += not _pauli_agrees(e1, e2)
    rng = np.random.default_rng(8)
    for d in (3, 4):
        g = _field(d)
        for _ in range(1000):
            e1, e2 = (
                ErrorOp(g, tuple(rng.integers(0, d, 2)), tuple(rng.integers(0, d, 2)), int(rng.integers(0, g.phase_order)))
                for _ in range(2)
            )
            total += 1
            bad += not _pauli_agrees(e1, e2)
    _record(8, "multiply, inverse and commute agree with dense matrices", bad == 0, f"{total - bad}/{total} pairs")


def test_criterion_09_css_bridge():
    f = FieldSpec(2)
    ok = True
    for n in (1, 2):
        vecs = list(itertools.product(range(2), repeat=n))
        pairs = [(x, y) for x in vecs for y in vecs]
        ok &= len({phi_map(f, *u) for u in pairs}) == len(pairs)
        ok &= all(symplectic_preserved(f, u, v) for u in pairs for v in pairs)
    for spec in (dw1_spec(), ex2_spec(3)):
        images = phi_on_stabilizer(ReflexiveStabilizer(spec))
        ok &= all(not any(x) or not any(z) for x, z in images)
    ok &= asymptotic_rate(0) == 1
    _record(9, "CSS map bijective, preserves commutation, yields CSS form; rate(0) = 1", bool(ok))


def _cli(args, threads: str) -> subprocess.CompletedProcess:
    env = dict(os.environ, REFLEXQEC_THREADS=threads)
    return subprocess.run([sys.executable, "-m", "reflexqec.cli", *args], env=env, capture_output=True, check=False)


def test_criterion_10_determinism():
    c = lambda name: str(CORPUS / name)  # noqa: E731
    commands = [
        ["search", c("dw1_errors.txt"), "--rule", "corollary"],
        ["search", c("fully_correlated_5.txt"), "--rule", "general"],
        ["search", c("fully_correlated_3.txt"), "--rule", "main", "--strategy", "exhaustive"],
        ["check", c("dw1_code.txt"), c("dw1_errors.txt")],
        ["check", c("four_state_code.txt"), c("four_state_errors.txt")],
        ["check", c("ex2_code_3.txt"), c("fully_correlated_3.txt")],
    ]
    differing = []
    for args in commands:
        outs = [_cli(args, t) for t in ("1", "4", "1", "4")]
        if len({(o.returncode, o.stdout) for o in outs}) != 1 or outs[0].returncode == 2:
            differing.append(args[0] + " " + os.path.basename(args[1]))
    _record(10, "search and check output byte-identical with 1 and 4 threads", not differing, f"differing: {differing}")
