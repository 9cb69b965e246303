import numpy as np
import pytest

from matrix import DenseMatrix, companion
from poly import parse_polynomial


@pytest.fixture()
def counterexample_polynomial():
    """Spectrally Perron, but its companion matrix has no nonnegative power"""
    return parse_polynomial("t^3 - 2t^2 - t + 2")


@pytest.fixture()
def golden_companion():
    """Companion matrix of t^2 - t - 1, nonnegative and primitive"""
    return companion(parse_polynomial("t^2 - t - 1"))


@pytest.fixture()
def cyclic_permutation():
    """3-cycle permutation matrix, irreducible with period 3"""
    return DenseMatrix(np.roll(np.eye(3), 1, axis=1))


@pytest.fixture()
def rng():
    return np.random.default_rng(20240101)
