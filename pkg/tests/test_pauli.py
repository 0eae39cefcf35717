from __future__ import annotations

import itertools
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from reflexqec.errors import DimensionCap, LengthMismatch, SpecMismatch, UnsupportedField
from reflexqec.galois import FieldSpec
from reflexqec.pauli import (
    ErrorOp,
    ErrorSet,
    apply_op,
    conjugate_set,
    gen_fully_correlated,
    gen_single_qudit,
    op_commutes,
    op_inverse,
    op_matrix,
    op_multiply,
)


def _field(d: int) -> FieldSpec:
    return FieldSpec(2, 2) if d == 4 else FieldSpec(d)


def _all_ops(f: FieldSpec, n: int):
    vecs = list(itertools.product(range(f.d), repeat=n))
    return [ErrorOp(f, a, b) for a in vecs for b in vecs]


def _random_op(f: FieldSpec, n: int, rng) -> ErrorOp:
    a = tuple(int(x) for x in rng.integers(0, f.d, n))
    b = tuple(int(x) for x in rng.integers(0, f.d, n))
    return ErrorOp(f, a, b, int(rng.integers(0, f.phase_order)))


def test_x_times_z_on_one_qubit(f2):
    x = ErrorOp(f2, (1,), (0,))
    z = ErrorOp(f2, (0,), (1,))
    assert op_multiply(x, z) == ErrorOp(f2, (1,), (1,), 0)
    # Z X = -X Z, and -1 = zeta^2 with zeta = i
    assert op_multiply(z, x) == ErrorOp(f2, (1,), (1,), 2)


def test_qutrit_inverse_example(f3):
    e = ErrorOp(f3, (1,), (2,))
    inv = op_inverse(e)
    assert (inv.a, inv.b) == ((2,), (1,))
    assert inv.kappa == 2
    assert op_multiply(e, inv).is_identity
    assert op_multiply(inv, e).is_identity


@pytest.mark.parametrize("n", [1, 2])
def test_matrix_matches_dense_oracle_exhaustive_qubits(n):
    f = FieldSpec(2)
    for op in _all_ops(f, n):
        for kappa in range(4):
            e = ErrorOp(f, op.a, op.b, kappa)
            assert np.allclose(op_matrix(e), oracles.dense(2, e.a, e.b, kappa))


@pytest.mark.parametrize("d,n", [(3, 2), (4, 2), (5, 1)])
def test_matrix_matches_dense_oracle_random(d, n):
    f = _field(d)
    rng = np.random.default_rng(d)
    for _ in range(30):
        e = _random_op(f, n, rng)
        assert np.allclose(op_matrix(e), oracles.dense(d, e.a, e.b, e.kappa))


@pytest.mark.parametrize("n", [1, 2])
def test_product_and_inverse_exhaustive_qubits(n):
    f = FieldSpec(2)
    ops = _all_ops(f, n)
    for e1 in ops:
        inv = op_inverse(e1)
        assert np.allclose(op_matrix(inv) @ op_matrix(e1), np.eye(2**n))
        for e2 in ops:
            prod = op_multiply(e1, e2)
            assert np.allclose(op_matrix(prod), op_matrix(e1) @ op_matrix(e2))


@pytest.mark.parametrize("d,n", [(3, 2), (4, 2), (5, 2), (9, 1)])
def test_product_and_inverse_random(d, n):
    f = FieldSpec(3, 2) if d == 9 else _field(d)
    rng = np.random.default_rng(100 + d)
    for _ in range(40):
        e1, e2 = _random_op(f, n, rng), _random_op(f, n, rng)
        m1, m2 = op_matrix(e1), op_matrix(e2)
        assert np.allclose(op_matrix(e1 * e2), m1 @ m2)
        assert np.allclose(op_matrix(op_inverse(e1)), np.linalg.inv(m1))
        if d != 9:
            assert oracles.identify(d, n, m1 @ m2) == (e1 * e2).params


@pytest.mark.parametrize("d,n", [(2, 2), (3, 2), (4, 1)])
def test_commutation_matches_matrices(d, n):
    f = _field(d)
    ops = _all_ops(f, n)
    for e1 in ops:
        for e2 in ops:
            m1, m2 = op_matrix(e1), op_matrix(e2)
            assert op_commutes(e1, e2) == np.allclose(m1 @ m2, m2 @ m1)


def test_apply_matches_matrix_and_batches(f3):
    rng = np.random.default_rng(7)
    states = rng.normal(size=(3, 27)) + 1j * rng.normal(size=(3, 27))
    for _ in range(10):
        e = _random_op(f3, 3, rng)
        m = op_matrix(e)
        assert np.allclose(apply_op(e, states), states @ m.T)
        assert np.allclose(apply_op(e, states[0]), m @ states[0])


def test_caps_and_shapes(f2):
    e = ErrorOp(f2, (0,) * 13, (0,) * 13)
    with pytest.raises(DimensionCap):
        op_matrix(e)
    with pytest.raises(DimensionCap):
        apply_op(ErrorOp(f2, (0,) * 15, (0,) * 15), np.zeros(2**15))
    with pytest.raises(LengthMismatch):
        apply_op(ErrorOp(f2, (1,), (0,)), np.zeros(4))
    with pytest.raises(LengthMismatch):
        ErrorOp(f2, (1, 0), (0,))
    with pytest.raises(ValueError):
        ErrorOp(f2, (2,), (0,))


def test_mismatched_operators(f2, f3):
    with pytest.raises(SpecMismatch):
        op_multiply(ErrorOp(f2, (1,), (0,)), ErrorOp(f3, (1,), (0,)))
    with pytest.raises(LengthMismatch):
        op_multiply(ErrorOp(f2, (1,), (0,)), ErrorOp(f2, (1, 0), (0, 0)))


def test_error_set_dedupes_and_inserts_identity(f2):
    x = ErrorOp(f2, (1,), (0,))
    with pytest.warns(UserWarning):
        E = ErrorSet(f2, 1, [x, x], warn=True)
    assert len(E) == 2 and E.ops[0].is_identity
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        E2 = ErrorSet(f2, 1, [ErrorOp.identity(f2, 1), x])
    assert E2 == E
    # same parameters, different phase: kept as separate operators
    E3 = ErrorSet(f2, 1, [x, ErrorOp(f2, (1,), (0,), 2)])
    assert len(E3) == 3 and E3.params() == {((0,), (0,)), ((1,), (0,))}


def test_conjugate_set_examples(f2):
    E = ErrorSet(f2, 1, [ErrorOp(f2, (1,), (0,))])
    assert conjugate_set(E).params() == {((0,), (0,)), ((1,), (0,))}
    FC = gen_fully_correlated(2)
    conj = conjugate_set(FC)
    assert conj.params() == FC.params()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8), st.integers(0, 3)), min_size=1, max_size=4))
def test_conjugate_set_is_closed_under_inversion_and_contains_identity(raw):
    f = FieldSpec(3)
    ops = [ErrorOp(f, (a % 3, a // 3), (b % 3, b // 3), k) for a, b, k in raw]
    E = ErrorSet(f, 2, ops)
    conj = conjugate_set(E)
    assert any(op.is_identity for op in conj)
    for e1 in E:
        for e2 in E:
            assert op_multiply(op_inverse(e1), e2) in conj
    inv_params = {(f.vneg(a), f.vneg(b)) for a, b in conj.params()}
    assert inv_params == conj.params()


def test_fully_correlated_generator():
    E = gen_fully_correlated(3)
    assert [op.params for op in E] == [
        ((0, 0, 0), (0, 0, 0)),
        ((1, 1, 1), (0, 0, 0)),
        ((1, 1, 1), (1, 1, 1)),
        ((0, 0, 0), (1, 1, 1)),
    ]
    with pytest.raises(UnsupportedField):
        gen_fully_correlated(3, FieldSpec(3))


@pytest.mark.parametrize("d,n", [(2, 3), (3, 2), (4, 2)])
def test_single_qudit_generator(d, n):
    f = _field(d)
    E = gen_single_qudit(n, f)
    assert len(E) == 1 + 2 * n * (d - 1)
    for op in E:
        assert sum(1 for x in op.a if x) + sum(1 for x in op.b if x) <= 1


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15), st.integers(0, 15), st.integers(0, 3))
def test_group_law_gf4(a1, b1, a2, b2, k):
    f = FieldSpec(2, 2)
    e1 = ErrorOp(f, f.vector(a1, 2), f.vector(b1, 2), k)
    e2 = ErrorOp(f, f.vector(a2, 2), f.vector(b2, 2))
    assert np.allclose(op_matrix(e1 * e2), op_matrix(e1) @ op_matrix(e2))
    assert (e1 * op_inverse(e1)).is_identity
