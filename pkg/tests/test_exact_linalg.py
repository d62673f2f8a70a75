from fractions import Fraction

import pytest

from exact_linalg import (
    EchelonBasis,
    SingularMatrixError,
    bareiss_determinant,
    bareiss_rank,
    nullspace,
    rref,
    solve_square,
    transpose,
)


def test_rank_of_dependent_rows():
    assert bareiss_rank([[1, 2, 3], [2, 4, 6], [1, 0, 1]]) == 2
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([]) == 0


def test_rank_with_fractions():
    assert bareiss_rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1


def test_determinant():
    assert bareiss_determinant([[2, 1], [1, 1]]) == 1
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[Fraction(1, 2), 0], [0, 2]]) == 1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert bareiss_determinant([]) == 1


def test_determinant_needs_square_matrix():
    with pytest.raises(ValueError):
        bareiss_determinant([[1, 2, 3], [4, 5, 6]])


def test_rref_pivots():
    rows, pivots = rref([[0, 2, 4], [1, 1, 1]])
    assert pivots == [0, 1]
    assert rows == [[1, 0, -1], [0, 1, 2]]


def test_nullspace_is_canonical():
    assert nullspace([[1, 1]]) == [[1, -1]]
    assert nullspace([[1, 0], [0, 1]]) == []
    assert nullspace([], ncols=2) == [[1, 0], [0, 1]]


def test_solve_square():
    assert solve_square([[2, 0], [0, 4]], [1, 1]) == [Fraction(1, 2), Fraction(1, 4)]
    with pytest.raises(SingularMatrixError):
        solve_square([[1, 1], [1, 1]], [1, 2])


def test_transpose():
    assert transpose([[1, 2, 3]]) == [[1], [2], [3]]


def test_echelon_basis_tracks_rank():
    span = EchelonBasis()
    assert span.add({"a": 1, "b": 1})
    assert not span.add({"a": 2, "b": 2})
    assert span.add({"b": 1})
    assert span.rank == 2
    assert span.contains({"a": 5})
    assert span.reduce({"a": 1, "c": 3}) == {"c": 3}


def test_echelon_basis_stops_early():
    span = EchelonBasis()
    rank = span.extend(({i: 1} for i in range(10)), stop_at=4)
    assert rank == 4
