# test_tail.py

import numpy as np
from numpy.testing import assert_allclose
import pytest

from conftest import make_sample
from core import frontier, tail
from resources import exceptions


RESIDUALS = [-0.5, -0.3, -0.2, -0.1]


def test_neg_hill_example():
    estimate = tail.neg_hill(RESIDUALS, 2)
    assert_allclose(estimate.gamma_hat, 2.5, rtol=1e-12)
    assert estimate.m == 4
    assert estimate.k == 2
    assert_allclose(estimate.denominator, 0.2, rtol=1e-12)


def test_neg_hill_ties_at_top():
    with pytest.raises(exceptions.ZeroDenominatorError):
        tail.neg_hill([-0.4, -0.25, 0.0, 0.0], 1)
    assert_allclose(tail.neg_hill([-0.4, -0.25, 0.0, 0.0], 2).gamma_hat, 2.0, rtol=1e-12)


@pytest.mark.parametrize('k', [0, 4, 5, -1, 1.5])
def test_bad_k(k):
    with pytest.raises(exceptions.BadKError):
        tail.neg_hill(RESIDUALS, k)


def test_scale_law():
    for c in (0.5, 2.0, 4.0):
        scaled = tail.neg_hill(np.array(RESIDUALS) * c, 2).gamma_hat
        assert_allclose(scaled, 2.5 / c, rtol=1e-14)


def test_permutation_and_location_invariance(rng):
    residuals = -rng.exponential(1.0, 50)
    reference = tail.neg_hill(residuals, 10).gamma_hat
    assert tail.neg_hill(rng.permutation(residuals), 10).gamma_hat == reference
    assert_allclose(tail.neg_hill(residuals + 0.375, 10).gamma_hat, reference, rtol=1e-12)


def test_resolve_gamma():
    assert tail.resolve_gamma(1.0, None, 20) == 1.0
    assert_allclose(tail.resolve_gamma(None, RESIDUALS, 2), 2.5, rtol=1e-12)
    with pytest.raises(exceptions.DomainError):
        tail.resolve_gamma(0.0, RESIDUALS, 2)


@pytest.mark.slow
def test_uniform_errors_estimate_unit_scale():
    estimates = []
    for seed in range(500):
        sample = make_sample(n=1000, seed=seed)
        residuals = frontier.residuals_even(sample, 0.2)
        estimates.append(tail.neg_hill(residuals, 20).gamma_hat)
    assert 0.85 < np.mean(estimates) < 1.25
