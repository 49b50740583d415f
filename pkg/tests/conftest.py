import numpy as np
import pytest

from nonstatic import ModelParams


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def random_params(rng, n):
    """n random valid parameter sets spanning signs, phases and frequencies."""
    out = []
    for _ in range(n):
        c1 = float(rng.uniform(1.0, 20.0))
        c2 = float(rng.uniform(max(1.0 / c1, 0.2), 20.0))
        out.append(ModelParams(
            c1=c1, c2=c2,
            c3_sign=1 if rng.random() < 0.5 else -1,
            phi=float(rng.uniform(-np.pi / 2, np.pi / 2 * 0.999)),
            omega=float(rng.uniform(0.5, 2.0)),
            t0=float(rng.uniform(-1.0, 1.0)),
        ))
    return out
