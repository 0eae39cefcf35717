from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from conftest import dw1_spec, ex2_spec

from reflexqec.cssbridge import (
    asymptotic_rate,
    binary_entropy,
    phi_inverse,
    phi_map,
    phi_on_stabilizer,
    split_css,
    symplectic_preserved,
    t_bound,
)
from reflexqec.errors import DomainError, UnsupportedField
from reflexqec.galois import FieldSpec, LinearSubspace, random_subspace, symplectic_star
from reflexqec.graphs import LucSpec
from reflexqec.reflexive import ReflexiveStabilizer


def _pairs(n: int):
    vecs = list(itertools.product(range(2), repeat=n))
    return [(x, y) for x in vecs for y in vecs]


def test_phi_examples(f2):
    assert phi_map(f2, (1, 1, 0), (1, 1, 0)) == ((1, 1, 0), (0, 0, 0))
    assert phi_map(f2, (0, 0, 0), (0, 0, 0)) == ((0, 0, 0), (0, 0, 0))
    assert phi_map(f2, (1, 0, 1), (0, 1, 1)) == ((0, 1, 1), (1, 1, 0))
    assert phi_map(f2, (1, 0, 1), (0, 0, 0)) == ((0, 0, 0), (1, 0, 1))


@pytest.mark.parametrize("n", [1, 2])
def test_phi_is_bijective_and_preserves_commutation_exhaustive(n):
    f = FieldSpec(2)
    pairs = _pairs(n)
    images = {phi_map(f, *u) for u in pairs}
    assert len(images) == len(pairs)
    for u in pairs:
        assert phi_inverse(f, *phi_map(f, *u)) == u
        for v in pairs:
            assert symplectic_preserved(f, u, v)


def test_phi_one_qubit_table(f2):
    u, v = ((1,), (1,)), ((0,), (1,))
    assert symplectic_star(f2, u, v) == 1
    assert symplectic_star(f2, phi_map(f2, *u), phi_map(f2, *v)) == 1
    assert len(_pairs(1)) ** 2 == 16


def test_phi_round_trip_random():
    f = FieldSpec(2)
    rng = np.random.default_rng(8)
    for n in range(3, 9):
        for _ in range(20):
            x = tuple(int(t) for t in rng.integers(0, 2, n))
            y = tuple(int(t) for t in rng.integers(0, 2, n))
            assert phi_inverse(f, *phi_map(f, x, y)) == (x, y)


def test_dw1_stabilizer_maps_to_css_form():
    S = ReflexiveStabilizer(dw1_spec())
    xs, zs = split_css(phi_on_stabilizer(S))
    assert xs == list(S.spec.C.perp.basis)
    assert zs == list(S.spec.C1.basis)


def test_ex2_stabilizer_maps_to_css_form():
    S = ReflexiveStabilizer(ex2_spec(3))
    xs, zs = split_css(phi_on_stabilizer(S))
    # C = F_2^3 has trivial complement, so only the flip generator remains
    assert xs == [] and zs == [(0, 0, 1)]


def test_full_space_without_flips_has_no_generators(f2):
    S = ReflexiveStabilizer(LucSpec(LinearSubspace.full(f2, 3), LinearSubspace.zero(f2, 3)))
    assert phi_on_stabilizer(S) == []


def test_commuting_sets_stay_commuting():
    rng = np.random.default_rng(1)
    f = FieldSpec(2)
    for _ in range(30):
        n = int(rng.integers(2, 6))
        C = random_subspace(f, n, int(rng.integers(0, n + 1)), rng)
        C1 = LinearSubspace.span(f, n, [c for c in C.basis if rng.random() < 0.5])
        images = phi_on_stabilizer(ReflexiveStabilizer(LucSpec(C, C1)))
        for u, v in itertools.combinations(images, 2):
            assert symplectic_star(f, u, v) == 0
        split_css(images)


def test_mixed_pairs_are_rejected():
    with pytest.raises(ValueError):
        split_css([((1, 0), (0, 1))])


def test_qudits_are_unsupported(f3):
    with pytest.raises(UnsupportedField):
        phi_map(f3, (1,), (1,))
    with pytest.raises(UnsupportedField):
        symplectic_preserved(f3, ((1,), (0,)), ((0,), (1,)))


@pytest.mark.parametrize("w1,w2,t", [(3, 3, 1), (1, 9, 0), (7, 5, 2), (5, 7, 2), (2, 2, 0)])
def test_t_bound(w1, w2, t):
    assert t_bound(w1, w2) == t


def test_t_bound_domain():
    with pytest.raises(DomainError):
        t_bound(0, 3)


def test_asymptotic_rate_values():
    assert asymptotic_rate(0) == 1
    assert asymptotic_rate(0.25) == pytest.approx(-0.5 * math.log2(3), abs=1e-12)
    assert round(asymptotic_rate(0.05), 4) == 0.3725
    assert binary_entropy(0.5) == 1.0
    for bad in (-0.1, 0.5, 1.0):
        with pytest.raises(DomainError):
            asymptotic_rate(bad)
