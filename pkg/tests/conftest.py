import pytest

from matricubes import Matricube


def from_rows(rows):
    """Build a 2-direction matricube from rows listed bottom to top.

    rows[x1][x0] is the value at (x0, x1), so the list reads like the
    printed grid flipped upside down.
    """
    w = (len(rows[0]) - 1, len(rows) - 1)
    ranks = tuple(rows[x1][x0] for x0 in range(w[0] + 1) for x1 in range(w[1] + 1))
    return Matricube(w, ranks)


def to_rows(m):
    return [
        [m.rank((x0, x1)) for x0 in range(m.width[0] + 1)]
        for x1 in range(m.width[1] + 1)
    ]


# the running worked examples used across the suite, rows bottom-up

M43_ROWS = [
    [0, 1, 2, 3, 4],
    [1, 2, 2, 3, 4],
    [2, 2, 2, 3, 4],
    [3, 3, 3, 4, 5],
]

M43_NS_ROWS = [
    [0, 1, 2, 2, 3],
    [1, 2, 2, 2, 3],
    [2, 2, 2, 2, 3],
    [3, 3, 3, 3, 4],
]

M54A_ROWS = [
    [0, 1, 2, 3, 4, 5],
    [1, 1, 2, 3, 4, 5],
    [2, 2, 3, 3, 4, 5],
    [3, 3, 4, 4, 5, 6],
    [4, 4, 4, 4, 5, 6],
]

M54B_ROWS = [
    [0, 1, 2, 3, 4, 5],
    [1, 2, 3, 3, 4, 5],
    [2, 3, 4, 4, 4, 5],
    [3, 4, 5, 5, 5, 6],
    [4, 4, 5, 5, 5, 6],
]


@pytest.fixture(scope="session")
def m43():
    return from_rows(M43_ROWS)


@pytest.fixture(scope="session")
def m43_ns():
    return from_rows(M43_NS_ROWS)


@pytest.fixture(scope="session")
def m54a():
    return from_rows(M54A_ROWS)


@pytest.fixture(scope="session")
def m54b():
    return from_rows(M54B_ROWS)


@pytest.fixture(scope="session")
def pool_22():
    from matricubes import enumerate_matricubes

    return list(enumerate_matricubes((2, 2)))


@pytest.fixture(scope="session")
def pool_111():
    from matricubes import enumerate_matricubes

    return list(enumerate_matricubes((1, 1, 1)))
