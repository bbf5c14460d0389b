from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtkl import linalg

small = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_nullspace_rank_nullity(r, c, data):
    a = data.draw(matrices(r, c))
    ker = linalg.nullspace(a, c)
    assert len(ker) + linalg.rank(a) == c
    for v in ker:
        assert all(isinstance(x, int) for x in v)
        assert linalg.matvec(a, v) == [0] * r
        assert v == linalg.primitive(v)
    if ker:
        assert linalg.rank(ker) == len(ker)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.data())
def test_inverse(n, data):
    a = data.draw(matrices(n, n))
    if linalg.rank(a) < n:
        with pytest.raises(linalg.SingularMatrixError):
            linalg.inverse(a)
    else:
        assert linalg.matmul(a, linalg.inverse(a)) == linalg.identity(n)


def test_primitive_and_proportional():
    assert linalg.primitive([Fraction(-1, 2), 1, 0]) == [1, -2, 0]
    assert linalg.primitive([0, -6, 4]) == [0, 3, -2]
    assert linalg.proportional([1, 2], [-2, -4])
    assert not linalg.proportional([1, 2], [2, 1])
    assert not linalg.proportional([0, 0], [1, 0])


def test_number_format_roundtrip():
    for x in (0, 3, -2, Fraction(5, 7), Fraction(-1, 3)):
        assert linalg.parse_number(linalg.format_number(x)) == x
    assert linalg.format_number(2) == "2/1"
    assert isinstance(linalg.parse_number("4/2"), int)


def test_nullspace_of_empty_system():
    assert linalg.nullspace([], 2) == [[1, 0], [0, 1]]
