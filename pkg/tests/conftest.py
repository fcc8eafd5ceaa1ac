import random

import pytest

from app.lattice.mukai import period_model
from app.lattice.standard import kummer_lambda, lambda_n
from app.models.orbit import HILBERT, KUMMER


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(params=[HILBERT, KUMMER])
def kind(request):
    return request.param


@pytest.fixture
def lambda7():
    return lambda_n(7)


@pytest.fixture
def kummer3():
    return kummer_lambda(3)


@pytest.fixture
def model7():
    return period_model(7, HILBERT)


def random_unimodular(rng, size, steps=12):
    """Product of elementary shears and sign flips."""
    M = [[int(i == j) for j in range(size)] for i in range(size)]
    for _ in range(steps):
        i, j = rng.sample(range(size), 2)
        c = rng.choice([-2, -1, 1, 2])
        M[i] = [a + c * b for a, b in zip(M[i], M[j])]
    return M
