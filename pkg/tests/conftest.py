import pytest

from qlab import SkewMatrix, VertexSet


def a_n(n: int) -> SkewMatrix:
    """Linearly oriented type-A path quiver 1 -> 2 -> ... -> n."""
    labels = tuple(str(i + 1) for i in range(n))
    entries = {(labels[i], labels[i + 1]): 1 for i in range(n - 1)}
    return SkewMatrix.from_entries(VertexSet(labels), entries)


@pytest.fixture
def a2() -> SkewMatrix:
    return a_n(2)


@pytest.fixture
def a3() -> SkewMatrix:
    return a_n(3)


@pytest.fixture
def a4() -> SkewMatrix:
    return a_n(4)


@pytest.fixture
def kronecker() -> SkewMatrix:
    return SkewMatrix.from_rows(("1", "2"), [[0, 2], [-2, 0]])


@pytest.fixture
def markov() -> SkewMatrix:
    return SkewMatrix.from_rows(("1", "2", "3"), [[0, 2, -2], [-2, 0, 2], [2, -2, 0]])
