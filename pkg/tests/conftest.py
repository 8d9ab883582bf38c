import sys
from pathlib import Path

import hypothesis
import numpy as np
import pytest

# import 2 levels up
sys.path.append(str(Path(__file__).parents[1]))

# pylint: disable=wrong-import-position
from measurement.state import DensityOperator  # noqa: E402

hypothesis.settings.register_profile("default", deadline=None, max_examples=50)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=5)
hypothesis.settings.register_profile("thorough", deadline=None, max_examples=500)
hypothesis.settings.load_profile("default")

SEED = 20240229


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def _complex_gaussian(rng, shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


@pytest.fixture
def random_hermitian(rng):
    def make(dim):
        m = _complex_gaussian(rng, (dim, dim))
        return 0.5 * (m + np.conj(m).T)

    return make


@pytest.fixture
def random_density(rng):
    def make(dim):
        m = _complex_gaussian(rng, (dim, dim))
        rho = m @ np.conj(m).T
        return DensityOperator(rho / np.trace(rho).real)

    return make


@pytest.fixture
def random_unitary(rng):
    def make(dim):
        q, r = np.linalg.qr(_complex_gaussian(rng, (dim, dim)))
        d = np.diag(r)
        return q * (d / np.abs(d))

    return make
