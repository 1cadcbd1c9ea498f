from fractions import Fraction

import pytest

from positroids.core.errors import ParameterError, RankDeficient
from positroids.core.linalg import (
    GrassmannPoint,
    as_fraction,
    fraction_str,
    nullspace,
    rank,
    rref,
)


def test_as_fraction_accepts_exact_values():
    assert as_fraction(3) == Fraction(3)
    assert as_fraction("-2/6") == Fraction(-1, 3)
    assert as_fraction(Fraction(5, 7)) == Fraction(5, 7)


def test_as_fraction_rejects_floats_and_zero_denominators():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        as_fraction(True)
    with pytest.raises(ZeroDivisionError):
        as_fraction("1/0")


def test_fraction_str():
    assert fraction_str(Fraction(4, 2)) == "2"
    assert fraction_str(Fraction(-1, 3)) == "-1/3"


def test_rank_and_rref():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0, 0], [0, 1, 1]]) == 2
    assert rank([]) == 0
    reduced, pivots = rref([[2, 4, 2], [1, 3, 2]])
    assert pivots == (0, 1)
    assert reduced == [[1, 0, -1], [0, 1, 1]]


def test_nullspace_is_canonical():
    assert nullspace([[1, 1, 1]], 3) == [(1, 0, -1), (0, 1, -1)]
    assert nullspace([[1, 0], [0, 1]], 2) == []


def test_point_validation():
    with pytest.raises(RankDeficient):
        GrassmannPoint(((1, 2, 3), (2, 4, 6)))
    with pytest.raises(ParameterError):
        GrassmannPoint(((1, 0), (0, 1)))
    with pytest.raises(ParameterError):
        GrassmannPoint(((1, 0, 0), (0, 1)))


def test_point_columns_are_periodic():
    M = GrassmannPoint(((1, 0, 0, 0), (0, 1, 1, 0)))
    assert M.column(5) == M.column(1)
    assert M.block_rank(2, 3) == 1
    assert M.block_rank(4, 5) == 1
    assert M.block_rank(3, 2) == 0


def test_rotate_reverse_and_act():
    M = GrassmannPoint(((1, 2, 3),))
    assert M.rotate(1).rows == ((2, 3, 1),)
    assert M.reverse().rows == ((3, 2, 1),)
    assert M.act([[2]]).rows == ((2, 4, 6),)


def test_chart_coordinates():
    M = GrassmannPoint(((2, 0, 2), (0, 1, 3)))
    assert M.chart() == ((1,), (3,))
    assert GrassmannPoint(((0, 1, 1),)).chart() is None


def test_payload_round_trip():
    M = GrassmannPoint((("1/2", 0, 1),))
    assert GrassmannPoint.from_dict(M.to_dict()) == M
    assert M.to_dict()["rows"] == [["1/2", "0", "1"]]
