import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from swisscheese.geometry import Disk

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def close(a: float, b: float, tol: float = 1e-12) -> bool:
    """Absolute tolerance scaled by the magnitudes involved."""
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def boundary_points(d: Disk, n: int = 1000, shrink: float = 1.0):
    t = np.linspace(0, 2 * math.pi, n, endpoint=False)
    r = d.radius * shrink
    return d.center.x + r * np.cos(t), d.center.y + r * np.sin(t)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
