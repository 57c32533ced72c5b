import math
import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "pelleis",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("pelleis")

SAMPLE_SEED = 20260815


def sample_points(n: int = 100, seed: int = SAMPLE_SEED) -> list[complex]:
    """Deterministic off-axis sample of the disk |z| <= 5.

    Rejection sampling keeps |Im z| >= 0.3, so every point stays well away
    from the real poles and both accumulation points.
    """
    rng = random.Random(seed)
    pts: list[complex] = []
    while len(pts) < n:
        x = rng.uniform(-5.0, 5.0)
        y = rng.uniform(-5.0, 5.0)
        if abs(y) >= 0.3 and math.hypot(x, y) <= 5.0:
            pts.append(complex(x, y))
    return pts


@pytest.fixture(scope="session")
def off_axis_points() -> list[complex]:
    return sample_points()
