import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from warmgray import PlanarImage

settings.register_profile(
    "warmgray",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("warmgray")


def rand_rgb(rng: np.random.Generator, height: int, width: int) -> PlanarImage:
    return PlanarImage(rng.random((height, width, 3)))


def rand_u8_rgb(rng: np.random.Generator, height: int, width: int) -> PlanarImage:
    return PlanarImage(rng.integers(0, 256, (height, width, 3)).astype(np.float64) / 255.0)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
