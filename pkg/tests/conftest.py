import random

import pytest

from supercolor import Multigraph
from supercolor.oracle import gen_multigraph


@pytest.fixture
def triangle():
    return Multigraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def shannon():
    """Triangle with every edge doubled: degree 4, multiplicity 2 everywhere."""
    return Multigraph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)])


@pytest.fixture
def petersen():
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return Multigraph(10, outer + spokes + inner)


def random_multigraph(seed, n_max=8, m_max=20, max_mult=3, n_min=2, m_min=0):
    """Seeded random multigraph with the edge count capped by the
    multiplicity budget."""
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    cap = max_mult * n * (n - 1) // 2
    m = rng.randint(m_min, min(m_max, cap))
    return gen_multigraph(n, m, max_mult, seed)
