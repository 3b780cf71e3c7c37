import numpy as np
import pytest

import yulesimon as ys


@pytest.fixture(scope="session")
def hits():
    """The embedded music-hits frequency sample (n = 16)."""
    return ys.music_hits_frequencies()


@pytest.fixture(scope="session")
def loss_prior_10():
    return ys.loss_based_prior(10)


@pytest.fixture(scope="session")
def loss_prior_20():
    return ys.loss_based_prior(20)


def tv_distance(p: np.ndarray, q: np.ndarray) -> float:
    return 0.5 * float(np.abs(np.asarray(p) - np.asarray(q)).sum())
