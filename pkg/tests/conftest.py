import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name):
    return json.loads((FIXTURES / name).read_text())


@pytest.fixture(scope="session")
def frozen_counts():
    return load_fixture("pointcounts.json")


@pytest.fixture(scope="session")
def frozen_period():
    return load_fixture("period_ws3.json")


def brute_isomorphic(g1, g2):
    """Permutation search, only for tiny graphs."""
    import itertools

    if g1.vertex_count != g2.vertex_count or g1.num_edges != g2.num_edges:
        return False
    a1 = g1.adjacency().tolist()
    a2 = g2.adjacency().tolist()
    n = g1.vertex_count
    for perm in itertools.permutations(range(n)):
        if all(a1[i][j] == a2[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return True
    return False
