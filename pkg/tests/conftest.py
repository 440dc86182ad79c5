"""Общие фикстуры тестов."""

import numpy as np
import pytest

from chorner.polyval import Polynomial


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1729)


def random_polynomial(
    rng: np.random.Generator, degree: int, scale: float = 1.0
) -> Polynomial:
    """Многочлен с коэффициентами из [-scale, scale]."""
    return Polynomial(
        float(a) for a in rng.uniform(-scale, scale, degree + 1)
    )
