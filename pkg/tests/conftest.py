import random

import pytest
from hypothesis import HealthCheck, settings

from schurweyl.weights import RationalWeight, Weight

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


def W(*values):
    """Weight with values at indices 0, 1, 2, ..."""
    return Weight.from_values(values)


def Q(*values):
    return RationalWeight.from_values(values)


def random_weight(rng, max_support, lo, hi, spread=8):
    """Random integer weight with scattered indices."""
    size = rng.randint(0, max_support)
    idx = rng.sample(range(spread), size)
    entries = {}
    for j in idx:
        v = 0
        while v == 0:
            v = rng.randint(lo, hi)
        entries[j] = v
    return Weight(entries)


@pytest.fixture
def rng():
    return random.Random(20261017)
