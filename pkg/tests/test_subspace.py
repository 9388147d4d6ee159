"""Subspace layer: bases, projectors, and both projection routes."""

import numpy as np
import pytest

from periodpursuit.number_theory import divisors, euler_totient
from periodpursuit.subspace import (
    MAX_BASIS_PERIOD,
    build_basis,
    project_exact,
    project_periodic,
)

from oracles import (
    dense_projector_full,
    project_exact_dense,
    project_periodic_dense,
    ramanujan_direct,
)


class TestBuildBasis:
    def test_unit_period(self):
        b = build_basis(1)
        assert b.circulant.tolist() == [[1]]
        assert b.projector.tolist() == [[1.0]]
        assert b.dimension == 1

    def test_period_two(self):
        b = build_basis(2)
        assert b.circulant.tolist() == [[1, -1], [-1, 1]]
        assert np.allclose(b.projector, np.array([[0.5, -0.5], [-0.5, 0.5]]))
        assert b.dimension == 1

    def test_twelve_trace_is_totient(self):
        b = build_basis(12)
        assert abs(np.trace(b.projector) - euler_totient(12)) < 1e-10

    def test_projector_invariants(self):
        for q in range(1, 37):
            b = build_basis(q)
            c = ramanujan_direct(q)
            for i in range(q):
                for j in range(q):
                    assert b.circulant[i, j] == c[(i - j) % q]
            p = b.projector
            assert np.max(np.abs(p @ p - p)) < 1e-10
            assert np.max(np.abs(p - p.T)) < 1e-10
            assert abs(np.trace(p) - euler_totient(q)) < 1e-10
            assert np.linalg.matrix_rank(b.circulant) == euler_totient(q)

    def test_rejects_zero_and_oversize(self):
        with pytest.raises(ValueError):
            build_basis(0)
        with pytest.raises(ValueError):
            build_basis(MAX_BASIS_PERIOD + 1)
        with pytest.raises(ValueError):
            build_basis(10, max_period=8)


class TestProjectExact:
    def test_constant_signal_lives_in_period_one(self):
        comp = project_exact(np.ones(12), 1)
        assert np.allclose(comp.samples, np.ones(12))
        assert abs(comp.energy - 12.0) < 1e-12

    def test_constant_has_no_exactly_three_periodic_part(self):
        comp = project_exact(np.ones(12), 3)
        assert np.max(np.abs(comp.samples)) < 1e-12
        assert comp.energy < 1e-12

    def test_alternating_is_exactly_two_periodic(self):
        x = np.tile([1.0, -1.0], 6)
        comp = project_exact(x, 2)
        assert np.allclose(comp.samples, x, atol=1e-12)
        assert abs(comp.energy - 12.0) < 1e-9
        assert np.max(np.abs(comp.samples - project_exact_dense(x, 2))) < 1e-10

    def test_padded_constant_case(self):
        # ones(10) against period 3: phase means are all 1, projection is 0
        comp = project_exact(np.ones(10), 3)
        assert np.max(np.abs(comp.samples)) < 1e-12
        assert np.max(np.abs(comp.samples - project_exact_dense(np.ones(10), 3))) < 1e-10

    def test_matches_dense_projector_on_multiple_lengths(self):
        rng = np.random.default_rng(42)
        for q in range(1, 25):
            m = int(rng.integers(1, 7))
            x = rng.standard_normal(q * m)
            got = project_exact(x, q).samples
            want = dense_projector_full(q, m) @ x
            assert np.max(np.abs(got - want)) < 1e-10, f"q={q} m={m}"

    def test_matches_padded_dense_oracle(self):
        rng = np.random.default_rng(7)
        for q, n in [(3, 10), (5, 12), (7, 24), (12, 30), (17, 40), (24, 50)]:
            x = rng.standard_normal(n)
            got = project_exact(x, q).samples
            want = project_exact_dense(x, q)
            assert np.max(np.abs(got - want)) < 1e-10, f"q={q} n={n}"

    def test_component_bookkeeping(self):
        rng = np.random.default_rng(3)
        x = rng.standard_normal(48)
        comp = project_exact(x, 6)
        assert abs(comp.energy - comp.samples @ comp.samples) <= 1e-9 * max(comp.energy, 1e-300)
        # q | N: output is exactly q-periodic
        assert np.max(np.abs(comp.samples[6:] - comp.samples[:-6])) < 1e-10
        assert comp.iteration == 0
        assert abs(comp.metric - (48 + 6) / 12.0 * comp.energy) < 1e-12

    def test_rejects_bad_periods_and_signals(self):
        with pytest.raises(ValueError):
            project_exact(np.ones(5), 6)
        with pytest.raises(ValueError):
            project_exact(np.ones(5), 0)
        with pytest.raises(ValueError):
            project_exact(np.array([1.0, np.nan]), 1)
        with pytest.raises(ValueError):
            project_exact(np.array([]), 1)


class TestProjectPeriodic:
    def test_constant_is_three_periodic(self):
        comp = project_periodic(np.ones(12), 3)
        assert np.allclose(comp.samples, np.ones(12))

    def test_already_periodic_signal_is_fixed_point(self):
        x = np.array([1.0, 2.0, 3.0, 1.0, 2.0, 3.0])
        comp = project_periodic(x, 3)
        assert np.allclose(comp.samples, x)

    def test_phase_means(self):
        comp = project_periodic(np.array([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]), 2)
        assert np.allclose(comp.samples, [3.0, 4.0, 3.0, 4.0, 3.0, 4.0])

    def test_matches_phase_mean_oracle(self):
        rng = np.random.default_rng(11)
        for q, n in [(2, 12), (3, 10), (5, 23), (8, 64), (9, 40)]:
            x = rng.standard_normal(n)
            got = project_periodic(x, q).samples
            want = project_periodic_dense(x, q)
            assert np.max(np.abs(got - want)) < 1e-12


class TestLengthNProjector:
    def test_idempotent_and_symmetric(self):
        # tiled projector at length 2q stays a true orthogonal projector
        for q in range(1, 65):
            p = dense_projector_full(q, 2)
            assert np.max(np.abs(p @ p - p)) < 1e-10
            assert np.max(np.abs(p - p.T)) < 1e-10


class TestOrthogonalityAndSplitting:
    def test_divisor_subspaces_orthogonal_spot(self):
        rng = np.random.default_rng(5)
        q = 36
        divs = divisors(q)
        for qi in divs:
            for qj in divs:
                if qi == qj:
                    continue
                for _ in range(5):
                    x = rng.standard_normal(q)
                    twice = project_exact(project_exact(x, qi).samples, qj).samples
                    assert np.linalg.norm(twice) <= 1e-9 * np.linalg.norm(x)

    def test_periodic_signal_splits_over_divisors(self):
        rng = np.random.default_rng(9)
        q, n = 12, 24
        block = rng.standard_normal(q)
        x = np.tile(block, n // q)
        parts = [project_exact(x, d) for d in divisors(q)]
        resum = sum(p.samples for p in parts)
        assert np.linalg.norm(resum - x) <= 1e-9 * np.linalg.norm(x)
        energy = sum(p.energy for p in parts)
        assert abs(energy - x @ x) <= 1e-9 * (x @ x)

    def test_no_divisor_structure_needed_for_exact_recovery(self):
        rng = np.random.default_rng(13)
        q, n = 10, 20
        x = np.tile(rng.standard_normal(q), n // q)
        assert project_exact(x, q).energy > 0
        resum = sum(project_exact(x, d).samples for d in divisors(q))
        assert np.linalg.norm(resum - x) <= 1e-9 * np.linalg.norm(x)
