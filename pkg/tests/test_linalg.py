import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from sunspec.linalg import ff_determinant


def cofactor_det(m):
    n = len(m)
    if n == 0:
        return 1
    return sum((-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(n))


def test_examples():
    assert ff_determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert ff_determinant([[2, -1], [-1, 2]]) == 3
    assert ff_determinant([]) == 1
    assert ff_determinant([[5]]) == 5


def test_needs_row_swap():
    m = [[0, 1, 2], [3, 4, 5], [6, 7, 9]]
    assert ff_determinant(m) == cofactor_det(m)
    assert ff_determinant([[0, 1], [1, 0]]) == -1


def test_singular():
    assert ff_determinant([[1, 2], [2, 4]]) == 0
    assert ff_determinant([[0, 0], [0, 1]]) == 0


@settings(max_examples=300, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=4, max_size=4))
def test_agrees_with_cofactor_expansion(m):
    assert ff_determinant(m) == cofactor_det(m)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(st.integers(-99, 99), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_various_sizes(m):
    assert ff_determinant(m) == cofactor_det(m)


def test_large_entries_stay_exact():
    big = 10**40
    m = [[big, 1], [1, big]]
    assert ff_determinant(m) == big * big - 1
