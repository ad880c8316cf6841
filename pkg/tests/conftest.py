import pytest

from diagwalks import DiagonalSystem, build_field

ROSTER = [(3, 1, 2), (5, 1, 2), (7, 1, 2), (2, 2, 3), (3, 2, 2)]


@pytest.fixture(scope="session")
def f9():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def f25():
    return build_field(5, 2)


@pytest.fixture(scope="session")
def f64():
    return build_field(2, 6)


@pytest.fixture(scope="session")
def roster_systems():
    return {(p, a, b): DiagonalSystem(p, a, b) for p, a, b in ROSTER}


def enumerate_walks(adj, r, i, j):
    """Independent walk oracle: recursive step enumeration, no matrices."""
    if r == 0:
        return 1 if i == j else 0
    total = 0
    n = len(adj)
    for mid in range(n):
        if adj[i][mid]:
            total += enumerate_walks(adj, r - 1, mid, j)
    return total
