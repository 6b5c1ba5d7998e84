import numpy as np
import pytest

from npls.pick import validate_data

WORKED_NODES = (2j, 3j)
EX7_NODES = (1 + 2j, -1 + 2j)
EX8_NODES = (1 + 2j, -1 + 2j, 3j)


@pytest.fixture
def worked():
    return validate_data(WORKED_NODES, [1j, 1j])


@pytest.fixture
def ex7():
    return validate_data(EX7_NODES)


@pytest.fixture
def ex8():
    return validate_data(EX8_NODES)


def lower_grid(n=20, seed=0):
    rng = np.random.default_rng(seed)
    return rng.uniform(-4, 4, n) - 1j * rng.uniform(0.2, 4, n)
