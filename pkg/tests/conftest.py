import random

import pytest

from polyscan import Polygon


BOWTIE = [(0.0, 0.0), (2.0, 2.0), (2.0, 0.0), (0.0, 2.0)]
SQUARE = [(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)]


@pytest.fixture
def bowtie():
    return Polygon.from_coords(BOWTIE)


@pytest.fixture
def square():
    return Polygon.from_coords(SQUARE)


def random_chord_polygon(seed, n=None):
    """Uniformly random vertices joined in generation order; heavily
    self-intersecting and free of exact degeneracies with probability 1."""
    rng = random.Random(seed)
    if n is None:
        n = rng.choice([6, 8, 10, 12, 16, 20])
    return Polygon.from_coords(
        [(rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)) for _ in range(n)])
