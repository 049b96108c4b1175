import numpy as np
import pytest

from circumcone import build_base, gram


def well_conditioned_base(rng, p, n, min_eig=1e-6):
    """Random unit base whose Gram matrix stays comfortably invertible."""
    while True:
        base = build_base(rng.normal(size=(p, n)))
        if np.linalg.eigvalsh(gram(base).entries)[0] > min_eig:
            return base


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
