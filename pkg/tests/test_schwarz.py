"""Schwarz-map generation, certification, and coefficient admissibility."""

import numpy as np
import pytest

from ulambda.errors import NormExceeded
from ulambda.schwarz import (
    CoefTriple,
    is_admissible_triple,
    make_schwarz,
    sample_schwarz,
    sample_triple,
    sup_norm_on_circle,
)


def test_admissible_extreme_point():
    assert is_admissible_triple(CoefTriple(1, 0, 0))


def test_admissible_c2_saturated_forces_c3_zero():
    assert not is_admissible_triple(CoefTriple(0, 0.5, 0.1))
    assert is_admissible_triple(CoefTriple(0, 0.5, 0.0))


def test_admissible_c2_over_budget():
    # (1 - 0.36)/2 = 0.32 < 0.4
    assert not is_admissible_triple(CoefTriple(0.6, 0.4, 0))


def test_admissible_phases_irrelevant():
    rng = np.random.default_rng(1)
    for _ in range(50):
        t = sample_triple(rng)
        spun = CoefTriple(
            t.c1 * np.exp(0.7j), t.c2 * np.exp(-2.1j), t.c3 * np.exp(1.3j)
        )
        assert is_admissible_triple(spun, tol=1e-12)


def test_sample_triple_postcondition_and_determinism():
    rng = np.random.default_rng(7)
    triples = [sample_triple(rng) for _ in range(200)]
    assert all(is_admissible_triple(t, tol=1e-12) for t in triples)
    rng2 = np.random.default_rng(7)
    again = [sample_triple(rng2) for _ in range(200)]
    assert triples == again


def test_sample_triple_statistical_budget():
    # empirical check of |c2| <= (1 - |c1|^2)/2 over a large draw
    rng = np.random.default_rng(123)
    worst = -np.inf
    for _ in range(100_000):
        t = sample_triple(rng)
        worst = max(worst, abs(t.c2) - 0.5 * (1 - abs(t.c1) ** 2))
    assert worst <= 0.0


def test_make_schwarz_constant_one():
    w = make_schwarz([1.0])
    assert np.allclose(w.omega1, [0, 1])
    assert abs(w.triple().c1 - 1) < 1e-15
    assert abs(w.sup_psi - 1.0) < 1e-12


def test_make_schwarz_linear_psi_saturates_c2():
    # psi = z integrates to z^2/2: the c2 budget at c1 = 0 is exactly 1/2
    w = make_schwarz([0.0, 1.0])
    t = w.triple()
    assert abs(t.c1) < 1e-15
    assert abs(t.c2 - 0.5) < 1e-15
    assert is_admissible_triple(t, tol=1e-12)


def test_make_schwarz_rejects_oversized():
    with pytest.raises(NormExceeded):
        make_schwarz([1.1])


def test_sup_norm_examples():
    assert abs(sup_norm_on_circle([0, 1], 1.0) - 1.0) < 1e-12
    assert abs(sup_norm_on_circle([0.5, 0.5], 1.0) - 1.0) < 1e-9
    assert abs(sup_norm_on_circle([0.3, 0.3], 1.0) - 0.6) < 1e-9


def test_sup_norm_monotone_in_radius():
    rng = np.random.default_rng(2)
    c = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    sups = [sup_norm_on_circle(c, r) for r in (0.2, 0.5, 0.9, 1.0)]
    assert all(a <= b + 1e-12 for a, b in zip(sups, sups[1:]))


def test_sup_norm_validates_arguments():
    with pytest.raises(ValueError):
        sup_norm_on_circle([1.0], 1.0, m=64)
    with pytest.raises(ValueError):
        sup_norm_on_circle([1.0], 1.5)


def test_certified_maps_contract_the_disk():
    # |w(z)| <= |z| and |w'(z)| <= 1 on sampled circles
    rng = np.random.default_rng(31)
    radii = [0.1, 0.3, 0.5, 0.7, 0.9, 0.999]
    for _ in range(40):
        w = sample_schwarz(rng)
        for r in radii:
            zs = r * np.exp(2j * np.pi * np.arange(64) / 64)
            for z in zs:
                assert abs(w.omega1_at(z)) <= abs(z) + 1e-10
                assert abs(w.psi_at(z)) <= 1 + 1e-10


def test_certified_triples_are_admissible():
    rng = np.random.default_rng(77)
    for _ in range(300):
        w = sample_schwarz(rng)
        assert is_admissible_triple(w.triple(), tol=1e-9)


def test_antiderivative_relation():
    rng = np.random.default_rng(4)
    for _ in range(50):
        w = sample_schwarz(rng)
        ks = np.arange(1, w.omega1.size)
        # k * c_k reproduces psi_{k-1} up to one rounding of the division
        assert np.max(np.abs(ks * w.omega1[1:] - w.psi)) <= 1e-15 * max(
            1.0, np.max(np.abs(w.psi))
        )
        assert w.omega1[0] == 0
