import random

import pytest

from toricmink.geometry import UnimodularMap, normalize

EX1 = normalize([(0, 0), (0, 1), (1, 3), (2, 4), (4, 2)])
EX2 = normalize([(0, 0), (4, 1), (1, 4)])
EX3 = normalize([(1, 0), (0, 1), (1, 2), (3, 3), (3, 2), (2, 0)])
DELTA = normalize([(0, 0), (1, 0), (0, 1)])
SQUARE = normalize([(0, 0), (1, 0), (1, 1), (0, 1)])


def random_unimodular(rng: random.Random, steps: int = 6, shift: int = 5) -> UnimodularMap:
    """Product of random elementary shears and sign flips, plus a translation."""
    a, b, c, d = 1, 0, 0, 1
    for _ in range(steps):
        k = rng.randint(-2, 2)
        if rng.random() < 0.5:
            a, b = a + k * c, b + k * d
        else:
            c, d = c + k * a, d + k * b
        if rng.random() < 0.2:
            a, b, c, d = c, d, a, b
    return UnimodularMap(a, b, c, d, rng.randint(-shift, shift), rng.randint(-shift, shift))


def random_polygon(rng: random.Random, box: int, max_points: int = 8):
    k = rng.randint(1, max_points)
    return normalize([(rng.randint(0, box), rng.randint(0, box)) for _ in range(k)])


@pytest.fixture
def rng():
    return random.Random(20071)
