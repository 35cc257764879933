# conftest.py

import numpy as np
import pytest

from core import frontier, sims
from resources import settings


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='Run the Monte Carlo acceptance runs')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


def make_sample(n=100, h=0.2, truth=None, errors=None, seed=1):
    """Equidistant design with buffer, Y = truth(x) + error"""
    xs = sims.gen_design(n, h)
    generator = np.random.default_rng(seed)
    if errors is None:
        errors = -generator.uniform(0.0, 1.0, len(xs))
    ys = (truth(xs) if truth is not None else np.zeros(len(xs))) + errors
    return frontier.Sample.from_points(xs, ys, settings.ELIGIBLE_INTERVAL)


@pytest.fixture
def null_sample():
    return make_sample()
