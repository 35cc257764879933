# test_poisson_mc.py

import numpy as np
from numpy.testing import assert_allclose
import pytest

from core import poisson_mc
from resources import exceptions, functions


GRID_N = 64


def line_process(y, x_lo=-1.0, x_hi=2.0, count=301, depth=1.0):
    xs = np.linspace(x_lo, x_hi, count)
    return poisson_mc.PlanarPointSet.from_points(xs, np.full(count, y), x_lo, x_hi, depth)


def replicate_processes(seed, depth=40.0):
    phi_o, master = poisson_mc.sample_processes(1.0, depth, np.random.default_rng(seed))
    return phi_o[poisson_mc.CENTER - 1], poisson_mc.window_e(master, poisson_mc.CENTER)


class TestProcesses:
    def test_mean_count(self):
        generator = np.random.default_rng(7)
        counts = [len(poisson_mc.draw_process(1.0, 0.0, 1.0, 20.0, generator)) for _ in range(10_000)]
        assert 19.85 < np.mean(counts) < 20.15

    def test_points_inside_strip(self):
        process = poisson_mc.draw_process(2.0, -1.0, 6.0, 10.0, np.random.default_rng(1))
        assert np.all((process.xs >= -1.0) & (process.xs <= 6.0))
        assert np.all((process.ys >= -10.0) & (process.ys <= 0.0))
        assert np.all(np.diff(process.xs) >= 0)

    def test_sample_processes(self):
        phi_o, master = poisson_mc.sample_processes(1.0, 20.0, np.random.default_rng(3))
        assert len(phi_o) == poisson_mc.ODD_PROCESSES
        assert (master.x_lo, master.x_hi) == poisson_mc.MASTER_STRIP
        with pytest.raises(exceptions.DomainError):
            poisson_mc.sample_processes(0.0, 20.0, np.random.default_rng(3))

    def test_processes_have_half_intensity(self):
        generator = np.random.default_rng(17)
        counts = []
        for _ in range(2000):
            phi_o, master = poisson_mc.sample_processes(2.0, 20.0, generator)
            counts.append((np.mean([len(process) for process in phi_o]), len(master)))
        odd, even = np.mean(counts, axis=0)
        assert 19.7 < odd < 20.3
        assert 138.5 < even < 141.5

    def test_window_e(self):
        _, master = poisson_mc.sample_processes(1.0, 20.0, np.random.default_rng(5))
        _, again = poisson_mc.sample_processes(1.0, 20.0, np.random.default_rng(5))
        for k in range(1, poisson_mc.ODD_PROCESSES + 1):
            window = poisson_mc.window_e(master, k)
            assert np.all((window.xs > -1.0) & (window.xs <= 2.0))
            assert_allclose(window.xs + k - 1, master.xs[(master.xs > k - 2) & (master.xs <= k + 1)])
            assert np.array_equal(window.ys, poisson_mc.window_e(again, k).ys)

    def test_windows_share_points(self):
        master = poisson_mc.PlanarPointSet.from_points([1.5], [-0.5], -1.0, 6.0, 20.0)
        assert len(poisson_mc.window_e(master, 1)) == 1
        assert len(poisson_mc.window_e(master, 2)) == 1
        assert len(poisson_mc.window_e(master, 3)) == 1
        assert len(poisson_mc.window_e(master, 4)) == 0

    def test_outside_strip(self):
        with pytest.raises(exceptions.DomainError):
            poisson_mc.PlanarPointSet.from_points([0.5], [0.1], 0.0, 1.0, 1.0)
        with pytest.raises(exceptions.DomainError):
            poisson_mc.PlanarPointSet.from_points([1.5], [-0.1], 0.0, 1.0, 1.0)


class TestGFunctional:
    def test_hand_example(self):
        phi_o = poisson_mc.PlanarPointSet.from_points([0.5], [-0.05], 0.0, 1.0, 1.0)
        assert_allclose(poisson_mc.g_functional(phi_o, line_process(-0.1), 1.0), -0.095, rtol=1e-10)

    def test_point_below_frontier_is_not_counted(self):
        phi_o = poisson_mc.PlanarPointSet.from_points([0.5], [-0.2], 0.0, 1.0, 1.0)
        assert_allclose(poisson_mc.g_functional(phi_o, line_process(-0.1), 1.0), 0.005, rtol=1e-10)

    def test_empty_odd_process(self):
        empty = poisson_mc.PlanarPointSet.from_points([], [], 0.0, 1.0, 20.0)
        for seed in range(20):
            _, phi_e = replicate_processes(seed)
            assert poisson_mc.g_functional(empty, phi_e, 1.0, GRID_N) >= 0.0

    def test_rescaling_law(self):
        for seed in range(20):
            phi_o, phi_e = replicate_processes(seed)
            scaled = poisson_mc.g_functional(phi_o.scale_y(2.0), phi_e.scale_y(2.0), 1.0, GRID_N)
            original = poisson_mc.g_functional(phi_o, phi_e, 2.0, GRID_N)
            assert_allclose(scaled, 4.0 * original, rtol=1e-9, atol=1e-12)

    def test_depth_truncation(self):
        for seed in range(300):
            phi_o, phi_e = replicate_processes(seed, depth=80.0)
            full = poisson_mc.g_functional(phi_o, phi_e, 1.0, GRID_N)
            truncated = poisson_mc.g_functional(phi_o.truncate(40.0), phi_e.truncate(40.0), 1.0, GRID_N)
            assert full == truncated

    def test_functional_is_centered(self):
        values = []
        for seed in range(4000):
            phi_o, phi_e = replicate_processes(seed)
            values.append(poisson_mc.g_functional(phi_o, phi_e, 1.0, GRID_N))
        assert abs(np.mean(values)) < 0.2

    @pytest.mark.slow
    def test_depth_insensitivity(self):
        changed = 0
        for seed in range(10_000):
            phi_o, phi_e = replicate_processes(seed, depth=80.0)
            full = poisson_mc.g_functional(phi_o, phi_e, 1.0, GRID_N)
            changed += full != poisson_mc.g_functional(phi_o.truncate(40.0), phi_e.truncate(40.0), 1.0, GRID_N)
        assert changed == 0

    def test_degenerate_draw(self):
        phi_o = poisson_mc.PlanarPointSet.from_points([0.5], [-0.05], 0.0, 1.0, 1.0)
        one_sided = line_process(-0.1, x_lo=0.5, x_hi=2.0)
        with pytest.raises(exceptions.DegenerateDrawError):
            poisson_mc.g_functional(phi_o, one_sided, 1.0, GRID_N)

    @pytest.mark.parametrize('grid_n', [0, 3, 7])
    def test_grid_n(self, grid_n):
        phi_o = poisson_mc.PlanarPointSet.from_points([0.5], [-0.05], 0.0, 1.0, 1.0)
        with pytest.raises(exceptions.DomainError):
            poisson_mc.g_functional(phi_o, line_process(-0.1), 1.0, grid_n)


class TestCovVariance:
    def test_hand_example(self):
        assert_allclose(poisson_mc.cov_variance([0, 1, 2], [0, 1, 2]), 2 / 9, rtol=1e-12)

    def test_constant(self):
        assert poisson_mc.cov_variance([0.0, 1.0, 2.0, 5.0], [3.0] * 4) == 0.0

    def test_errors(self):
        with pytest.raises(exceptions.TooFewRepsError):
            poisson_mc.cov_variance([1.0], [1.0])
        with pytest.raises(exceptions.LengthMismatchError):
            poisson_mc.cov_variance([1.0, 2.0], [1.0])


class TestEstimateA1:
    def test_small_run(self):
        estimate = poisson_mc.estimate_a1(2, grid_n=GRID_N, seed=11, workers=1)
        assert np.isfinite(estimate.value)
        assert estimate.std_error >= 0
        assert estimate.reps == 2
        assert estimate.depth == 40.0
        assert estimate.a1_equivalent == estimate.value

    def test_independent_of_workers(self):
        serial = poisson_mc.estimate_a1(6, grid_n=GRID_N, seed=4, workers=1)
        parallel = poisson_mc.estimate_a1(6, grid_n=GRID_N, seed=4, workers=2)
        assert serial == parallel

    def test_replicates_depend_on_seed_only(self):
        first = poisson_mc._replicate_values(1.0, 40.0, GRID_N, 9, 3)
        second = poisson_mc._replicate_values(1.0, 40.0, GRID_N, 9, 3)
        assert first == second

    def test_replicate_streams_differ(self):
        first = functions.replicate_rng(1, 0).random()
        assert first != functions.replicate_rng(1, 1).random()
        assert first != functions.replicate_rng(1, 0, 1).random()

    @pytest.mark.parametrize('reps', [0, 1, 2.5, True])
    def test_too_few_reps(self, reps):
        with pytest.raises(exceptions.TooFewRepsError):
            poisson_mc.estimate_a1(reps)

    @pytest.mark.parametrize('kwargs', [dict(gamma=0.0), dict(depth=-1.0), dict(grid_n=5)])
    def test_domain(self, kwargs):
        with pytest.raises(exceptions.DomainError):
            poisson_mc.estimate_a1(2, **kwargs)

    @pytest.mark.slow
    def test_reproduces_a1(self):
        estimate = poisson_mc.estimate_a1(100_000, seed=0)
        assert 12.95 <= estimate.value <= 14.45
        assert 0.15 <= estimate.std_error <= 0.35

    @pytest.mark.slow
    def test_gamma_scaling(self):
        unit = poisson_mc.estimate_a1(100_000, gamma=1.0, seed=1)
        doubled = poisson_mc.estimate_a1(100_000, gamma=2.0, seed=2)
        assert 0.8 <= doubled.a1_equivalent / unit.value <= 1.2
