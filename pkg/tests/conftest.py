import random

import pytest

from partcat.diagrams import PartitionDiagram, canonical_blocks


def random_diagram(rng: random.Random, max_points: int = 6,
                   pairing: bool = False) -> PartitionDiagram:
    n = rng.randrange(0, max_points + 1)
    if pairing and n % 2:
        n -= 1
    k = rng.randrange(0, n + 1)
    upper = "".join(rng.choice("wb") for _ in range(k))
    lower = "".join(rng.choice("wb") for _ in range(n - k))
    points = list(range(n))
    rng.shuffle(points)
    blocks = []
    if pairing:
        for i in range(0, n, 2):
            blocks.append(points[i:i + 2])
    else:
        while points:
            size = rng.randint(1, min(3, len(points)))
            blocks.append(points[:size])
            points = points[size:]
    return PartitionDiagram(upper, lower, canonical_blocks(blocks))


@pytest.fixture
def rng():
    return random.Random(20240817)
