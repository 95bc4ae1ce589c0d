import random

import pytest

from quintcap.cyclotomic import CycInt
from quintcap.primes import factor_rational_prime


@pytest.fixture
def rng():
    return random.Random(20250808)


def random_cycint(rng, lo=-50, hi=50):
    return CycInt(*(rng.randint(lo, hi) for _ in range(4)))


@pytest.fixture(scope="session")
def split_11():
    return factor_rational_prime(11)


@pytest.fixture(scope="session")
def split_31():
    return factor_rational_prime(31)


@pytest.fixture(scope="session")
def split_151():
    return factor_rational_prime(151)
