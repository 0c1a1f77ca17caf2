"""Exact linear algebra kernel tests."""

from fractions import Fraction

from liecert.linalg import (
    RationalMatrix,
    integer_roots,
    inverse,
    matvec,
    minimal_polynomial,
    poly_eval_matrix,
    rank,
    solvable,
    solve_unique,
)


def test_matmul_and_transpose():
    a = RationalMatrix([[1, 2], [3, 4]])
    b = RationalMatrix([[0, 1], [1, 0]])
    assert (a @ b).rows == [[2, 1], [4, 3]]
    assert a.transpose().rows == [[1, 3], [2, 4]]
    assert (a - a).is_zero()
    assert a.trace() == 5


def test_matvec():
    a = RationalMatrix([[1, 2], [3, 4]])
    assert matvec(a, [1, 1]) == [3, 7]


def test_rank_and_inverse():
    a = RationalMatrix([[2, 0], [0, Fraction(1, 3)]])
    assert rank(a) == 2
    inv = inverse(a)
    assert inv @ a == RationalMatrix.identity(2)
    singular = RationalMatrix([[1, 2], [2, 4]])
    assert rank(singular) == 1


def test_solve_unique():
    a = RationalMatrix([[1, 1], [1, -1]])
    x = solve_unique(a, [2, 0])
    assert x == [1, 1]
    sing = RationalMatrix([[1, 1], [1, 1]])
    assert solvable(sing, [1, 1])
    assert not solvable(sing, [1, 2])


def test_minimal_polynomial_diagonal():
    # eigenvalues 1 and 2: minimal polynomial t^2 - 3t + 2
    a = RationalMatrix([[1, 0, 0], [0, 2, 0], [0, 0, 2]])
    p = minimal_polynomial(a)
    assert p == [2, -3, 1]
    assert poly_eval_matrix(p, a).is_zero()
    roots, remainder = integer_roots(p)
    assert sorted(roots) == [1, 2]
    assert len(remainder) == 1


def test_minimal_polynomial_nilpotent():
    a = RationalMatrix([[0, 1], [0, 0]])
    assert minimal_polynomial(a) == [0, 0, 1]
