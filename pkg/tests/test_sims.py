# test_sims.py

import numpy as np
from numpy.testing import assert_allclose
import pytest

from core import decision, sims
from resources import exceptions


def experiment_spec(**values):
    base = dict(n=100, h=0.2, h1=0.2, k=20, level=0.05, errors='uniform_unit', reps=1000, seed=2024)
    base.update(values)
    return sims.ExperimentSpec.from_dict(base)


class TestDesign:
    def test_enumeration(self):
        xs = sims.gen_design(10, 0.2)
        assert len(xs) == 15
        assert_allclose(xs[[0, -1]], [-0.2, 1.2], atol=1e-15)
        assert np.count_nonzero((xs >= 0) & (xs <= 1)) == 11
        assert_allclose(np.diff(xs), 0.1, rtol=1e-12)

    def test_default_design(self):
        xs = sims.gen_design(100, 0.2)
        assert len(xs) == 141
        assert xs[20] == 0.0
        assert xs[120] == 1.0

    @pytest.mark.parametrize('n, h', [(10, 0.0), (10, -0.1), (0, 0.2)])
    def test_domain(self, n, h):
        with pytest.raises(exceptions.DomainError):
            sims.gen_design(n, h)


class TestErrors:
    def test_uniform(self):
        draws = sims.gen_errors('uniform_unit', 100_000, np.random.default_rng(1))
        assert np.all(draws <= 0) and np.all(draws >= -1)
        assert abs(draws.mean() + 0.5) < 0.003

    def test_neg_exponential(self):
        draws = sims.gen_errors('neg_exponential', 100_000, np.random.default_rng(2))
        assert np.all(draws <= 0)
        assert abs(draws.mean() + 1.0) < 0.0095

    def test_unknown_law(self):
        with pytest.raises(exceptions.InvalidSpecError):
            sims.gen_errors('normal', 10, np.random.default_rng(3))


class TestTruth:
    def test_examples(self):
        assert sims.truth_eval(sims.Truth(), 0.37) == 0.0
        assert_allclose(sims.truth_eval(sims.Truth('sin', c=1.0, alpha=2.0), 0.25), 1.0, rtol=1e-15)
        assert sims.truth_eval(sims.Truth('power', c=2.0, p=2, x0=0.5), 1.0) == 0.5
        assert sims.truth_eval(sims.Truth('neg_power', c=2.0, p=2, x0=0.5), 1.0) == -0.5

    def test_arrays(self):
        values = sims.truth_eval(sims.Truth('power', c=1.0, p=3), np.array([0.0, 0.5, 1.0]))
        assert_allclose(values, [0.0, 0.125, 1.0])


class TestSpec:
    def test_from_dict(self):
        spec = experiment_spec(truth='sin', c='0.5', alpha='2', gamma_mode='known')
        assert spec.truth == sims.Truth('sin', c=0.5, alpha=2.0)
        assert spec.gof_config().gamma == 1.0
        assert sims.ExperimentSpec.from_dict(spec.to_dict()) == spec

    def test_estimated_gamma_config(self):
        assert experiment_spec().gof_config() == decision.GofConfig(h=0.2, h1=0.2, k=20, level=0.05)

    @pytest.mark.parametrize('values', [
        dict(truth='power', p=2.5),
        dict(truth='power', p=0),
        dict(k=50),
        dict(n=101),
        dict(reps=0),
        dict(level=1.5),
        dict(errors='normal'),
        dict(truth='cos'),
        dict(gamma_mode='guess'),
        dict(bandwidth=0.2),
        dict(n='many'),
        dict(seed=1.5),
    ])
    def test_invalid(self, values):
        with pytest.raises(exceptions.InvalidSpecError):
            experiment_spec(**values)

    def test_known_gamma_allows_large_k(self):
        assert experiment_spec(k=50, gamma_mode='known').k == 50


class TestExperiment:
    def test_single_replicate(self):
        report = sims.run_experiment(experiment_spec(reps=1), workers=1)
        assert report.rejection_rate_phi1 in (0.0, 1.0)
        assert report.rejection_rate_phi2 in (0.0, 1.0)
        assert report.reps_done + report.reps_failed == 1
        assert report.seed == 2024

    def test_independent_of_workers(self):
        spec = experiment_spec(reps=12, truth='sin', c=0.5, alpha=2)
        assert sims.run_experiment(spec, workers=1) == sims.run_experiment(spec, workers=2)

    def test_rates_and_halfwidth(self):
        report = sims.run_experiment(experiment_spec(reps=20, truth='sin', c=1.0, alpha=2, gamma_mode='known'),
                                     workers=1)
        assert 0 <= report.rejection_rate_phi1 <= 1
        assert 0 <= report.rejection_rate_phi2 <= 1
        rate = report.rejection_rate_phi2
        assert_allclose(report.binom_ci_halfwidth, 3 * np.sqrt(rate * (1 - rate) / report.reps_done))

    def test_failed_replicates_are_counted(self):
        # h equals the spacing, so the open window around x = 0.01 holds no estimation point
        report = sims.run_experiment(experiment_spec(reps=5, h=0.01, gamma_mode='known'), workers=1)
        assert report.reps_failed == 5
        assert report.reps_done == 0
        assert report.rejection_rate_phi2 == 0.0
        assert report.binom_ci_halfwidth == 0.0
        assert report.mean_T is None
        assert report.mean_gamma is None

    def test_empty_half_windows_fail_replicates(self):
        # Half windows of width 0.04 fit between points 0.05 apart, so the automatic C_x is 0
        report = sims.run_experiment(experiment_spec(n=20, h=0.08, h1=0.08, k=3, reps=3, gamma_mode='known'),
                                     workers=1)
        assert report.reps_failed == 3
        assert report.reps_done == 0

    def test_invalid_spec(self):
        spec = sims.ExperimentSpec(reps=0)
        with pytest.raises(exceptions.InvalidSpecError):
            sims.run_experiment(spec, workers=1)

    def test_affine_shift_invariance(self):
        spec = experiment_spec(truth='sin', c=0.5, alpha=2)
        for replicate in range(10):
            plain = sims.build_sample(spec, np.random.default_rng(replicate))
            shifted = sims.build_sample(spec, np.random.default_rng(replicate), affine=(-1.5, 0.75))
            first = decision.run_test(plain, spec.gof_config())
            second = decision.run_test(shifted, spec.gof_config())
            assert_allclose(second.T, first.T, rtol=1e-9, atol=1e-12)
            assert second.reject2 == first.reject2


@pytest.mark.slow
class TestSizeAndPower:
    def test_size_uniform_errors(self):
        report = sims.run_experiment(experiment_spec())
        assert 0.029 <= report.rejection_rate_phi2 <= 0.071
        assert report.rejection_rate_phi1 <= report.rejection_rate_phi2

    def test_size_uniform_errors_one_percent(self):
        report = sims.run_experiment(experiment_spec(level=0.01))
        assert 0.008 <= report.rejection_rate_phi2 <= 0.036
        assert report.rejection_rate_phi1 <= report.rejection_rate_phi2

    @pytest.mark.parametrize('level', [0.05, 0.01])
    def test_size_known_gamma(self, level):
        report = sims.run_experiment(experiment_spec(gamma_mode='known', level=level))
        assert report.rejection_rate_phi2 <= 0.02
        assert report.rejection_rate_phi1 <= report.rejection_rate_phi2

    def test_power_sin_known_gamma(self):
        report = sims.run_experiment(experiment_spec(gamma_mode='known', truth='sin', c=0.5, alpha=2))
        assert 0.93 <= report.rejection_rate_phi2 <= 0.97
        strong = sims.run_experiment(experiment_spec(gamma_mode='known', truth='sin', c=1.0, alpha=2))
        assert strong.rejection_rate_phi2 >= 0.99

    def test_power_sin_estimated_gamma(self):
        report = sims.run_experiment(experiment_spec(truth='sin', c=0.5, alpha=2))
        assert 0.95 <= report.rejection_rate_phi2 <= 0.985
