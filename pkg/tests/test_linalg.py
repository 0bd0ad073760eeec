"""Exact linear algebra, checked against naive Fraction-arithmetic oracles."""

from fractions import Fraction
from random import Random

import pytest

from oracles import matmul, naive_det, naive_rank
from util import random_int_matrix

from qfact.errors import DimensionMismatch
from qfact.linalg import (
    IntMatrix,
    RatMatrix,
    determinant,
    rank,
    rank_and_pivot_columns,
    row_space_membership,
    smith_normal_form,
    solve_integer,
)


def _as_lists(M: IntMatrix):
    return [list(row) for row in M.entries]


def _check_smith(A: IntMatrix):
    """Full soundness of one decomposition, via the oracles only."""
    dec = smith_normal_form(A)
    assert matmul(matmul(_as_lists(dec.U), _as_lists(A)), _as_lists(dec.V)) == _as_lists(
        dec.D
    )
    assert abs(naive_det(_as_lists(dec.U))) == 1
    assert abs(naive_det(_as_lists(dec.V))) == 1
    for i, row in enumerate(dec.D.entries):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    diag = dec.diagonal
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if b:
            assert a and b % a == 0
    assert sum(1 for d in diag if d) == naive_rank(_as_lists(A))
    return dec


def test_smith_identity():
    I = IntMatrix.identity(3)
    dec = smith_normal_form(I)
    assert dec.D == I
    assert dec.diagonal == (1, 1, 1)


def test_smith_diagonal_divisibility_examples():
    # already diagonal but out of chain order: invariant factors reorganize
    assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 4]])).diagonal == (2, 4)
    assert smith_normal_form(IntMatrix.from_rows([[4, 0], [0, 6]])).diagonal == (2, 12)
    assert smith_normal_form(IntMatrix.from_rows([[6, 0], [0, 10]])).diagonal == (2, 30)


def test_smith_projective_space_rays():
    # ray matrix of the fan of the standard simplex: full rank, no torsion
    rays = [(-1, -1, -1), (0, 0, 1), (0, 1, 0), (1, 0, 0)]
    dec = _check_smith(IntMatrix.from_rows(rays))
    assert dec.diagonal == (1, 1, 1)
    assert dec.U.nrows == 4 and dec.V.nrows == 3


def test_smith_torsion_example():
    # cokernel of 2x scaling is (Z/2)^2
    dec = _check_smith(IntMatrix.from_rows([[2, 0], [0, 2]]))
    assert dec.diagonal == (2, 2)


def test_smith_zero_matrix():
    dec = _check_smith(IntMatrix.from_rows([[0, 0, 0], [0, 0, 0]]))
    assert dec.diagonal == (0, 0)


def test_smith_awkward_pivot_progress():
    # remainder loop must make progress when no entry divides the others
    dec = _check_smith(IntMatrix.from_rows([[5, 7], [4, 9]]))
    assert dec.diagonal[0] == 1


def test_smith_random_soundness():
    rng = Random(101)
    for trial in range(200):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        A = IntMatrix.from_rows(random_int_matrix(rng, nrows, ncols))
        _check_smith(A)


def test_smith_deterministic():
    rng = Random(5)
    A = IntMatrix.from_rows(random_int_matrix(rng, 5, 4))
    assert smith_normal_form(A) == smith_normal_form(A)


def test_determinant_matches_naive():
    rng = Random(77)
    for _ in range(100):
        n = rng.randint(1, 6)
        rows = random_int_matrix(rng, n, n)
        assert determinant(IntMatrix.from_rows(rows)) == naive_det(rows)


def test_determinant_shape_guard():
    with pytest.raises(DimensionMismatch):
        determinant(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_rank_examples():
    assert rank(RatMatrix.from_rows([[1, 0], [0, 1]])) == 2
    assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(RatMatrix.from_rows([[0, 0], [0, 0]])) == 0
    assert rank(RatMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)]])) == 1


def test_rank_agreement_random():
    rng = Random(303)
    for trial in range(200):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        rows = random_int_matrix(rng, nrows, ncols)
        A = RatMatrix.from_rows(rows)
        assert rank(A) == naive_rank(rows)
    # a few larger ones; low-rank products stress the pivoting
    for trial in range(8):
        left = random_int_matrix(rng, 20, 3)
        right = random_int_matrix(rng, 3, 25)
        rows = matmul(left, right)
        assert rank(RatMatrix.from_rows(rows)) == naive_rank(rows)


def test_rank_invariances():
    rng = Random(404)
    for _ in range(30):
        rows = random_int_matrix(rng, rng.randint(2, 6), rng.randint(2, 6))
        A = RatMatrix.from_rows(rows)
        r = rank(A)
        assert r <= min(A.nrows, A.ncols)
        assert rank(A.transpose()) == r
        assert rank(RatMatrix.from_rows(rows + [rows[0]])) == r
        scaled = [[Fraction(7, 3) * x for x in rows[0]]] + [
            [Fraction(x) for x in row] for row in rows[1:]
        ]
        assert rank(RatMatrix.from_rows(scaled)) == r
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert rank(RatMatrix.from_rows(shuffled)) == r


def test_rank_of_rational_entries():
    rng = Random(505)
    for _ in range(40):
        rows = [
            [
                Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                for _ in range(rng.randint(1, 6))
            ]
            for _ in range(rng.randint(1, 6))
        ]
        width = max(len(r) for r in rows)
        rows = [r + [Fraction(0)] * (width - len(r)) for r in rows]
        assert rank(RatMatrix.from_rows(rows)) == naive_rank(rows)


def test_pivot_columns_span_the_rank():
    rng = Random(606)
    for _ in range(60):
        rows = random_int_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        A = RatMatrix.from_rows(rows)
        r, pivots = rank_and_pivot_columns(A)
        assert r == naive_rank(rows)
        assert len(pivots) == r
        assert all(0 <= j < A.ncols for j in pivots)
        sub = [[row[j] for j in pivots] for row in rows]
        assert naive_rank(sub) == r


def test_pivot_columns_example():
    r, pivots = rank_and_pivot_columns(RatMatrix.from_rows([[0, 1, 0], [0, 0, 2]]))
    assert r == 2
    assert pivots == (1, 2)


def test_row_space_membership_examples():
    A = RatMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert row_space_membership(A, (1, 1, 2))
    assert row_space_membership(A, (0, 0, 0))
    assert not row_space_membership(A, (0, 0, 1))
    empty = RatMatrix(())
    assert row_space_membership(empty, ())


def test_row_space_membership_random():
    rng = Random(707)
    for _ in range(40):
        rows = random_int_matrix(rng, 3, rng.randint(3, 7))
        A = RatMatrix.from_rows(rows)
        weights = [rng.randint(-3, 3) for _ in rows]
        combo = [
            sum(w * row[j] for w, row in zip(weights, rows))
            for j in range(A.ncols)
        ]
        assert row_space_membership(A, combo)
        probe = [rng.randint(-9, 9) for _ in range(A.ncols)]
        expected = naive_rank(rows + [probe]) == naive_rank(rows)
        assert row_space_membership(A, probe) == expected


def test_solve_integer_examples():
    I = IntMatrix.identity(3)
    assert solve_integer(I, (5, -2, 7)) == (5, -2, 7)
    assert solve_integer(IntMatrix.from_rows([[2]]), (3,)) is None
    assert solve_integer(IntMatrix.from_rows([[2, 0], [0, 2]]), (1, 0)) is None
    assert solve_integer(IntMatrix.from_rows([[2, 3]]), (1,)) is not None


def test_solve_integer_random_round_trip():
    rng = Random(808)
    for _ in range(60):
        A = IntMatrix.from_rows(
            random_int_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        )
        x0 = tuple(rng.randint(-5, 5) for _ in range(A.ncols))
        b = A.mul_vector(x0)
        x = solve_integer(A, b)
        assert x is not None
        assert A.mul_vector(x) == b


def test_solve_integer_unsolvable_off_image():
    # column space is the even sublattice in the first coordinate
    A = IntMatrix.from_rows([[2, 4], [0, 0]])
    assert solve_integer(A, (1, 0)) is None
    assert solve_integer(A, (0, 1)) is None
    x = solve_integer(A, (6, 0))
    assert x is not None and A.mul_vector(x) == (6, 0)


def test_shape_guards():
    with pytest.raises(DimensionMismatch):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        RatMatrix.from_rows([[1], [2, 3]])
    A = IntMatrix.from_rows([[1, 2]])
    with pytest.raises(DimensionMismatch):
        A.mul(A)
    with pytest.raises(DimensionMismatch):
        A.mul_vector((1, 2, 3))
    with pytest.raises(DimensionMismatch):
        row_space_membership(RatMatrix.from_rows([[1, 2]]), (1, 2, 3))
    with pytest.raises(DimensionMismatch):
        solve_integer(A, (1, 2))


def test_matrix_basics():
    A = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert A.nrows == 2 and A.ncols == 3
    assert A.row(1) == (4, 5, 6)
    assert A.column(2) == (3, 6)
    assert A.transpose().entries == ((1, 4), (2, 5), (3, 6))
    B = RatMatrix.from_rows([[1, 2]])
    assert B.stack_row((3, 4)).entries[1] == (Fraction(3), Fraction(4))
    with pytest.raises(DimensionMismatch):
        B.stack_row((1, 2, 3))
