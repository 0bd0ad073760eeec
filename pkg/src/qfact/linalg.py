"""Exact integer and rational matrix algebra.

Everything here is exact: integer matrices use Python's arbitrary-precision
ints, rational matrices use `fractions.Fraction` (always in lowest terms).
Floating point is never used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DimensionMismatch


def _check_rectangular(entries, kind):
    if entries and any(len(row) != len(entries[0]) for row in entries):
        raise DimensionMismatch(f"ragged rows in {kind} matrix")


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix over the integers, stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check_rectangular(self.entries, "integer")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else self

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch("matrix product shape mismatch")
        cols = other.transpose().entries
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def mul_vector(self, v) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise DimensionMismatch("matrix-vector shape mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)


@dataclass(frozen=True)
class RatMatrix:
    """Dense matrix over the rationals; entries are Fractions in lowest terms."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        _check_rectangular(self.entries, "rational")

    @classmethod
    def from_rows(cls, rows) -> "RatMatrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def transpose(self) -> "RatMatrix":
        return RatMatrix(tuple(zip(*self.entries))) if self.entries else self

    def stack_row(self, v) -> "RatMatrix":
        row = tuple(Fraction(x) for x in v)
        if self.entries and len(row) != self.ncols:
            raise DimensionMismatch("appended row has wrong length")
        return RatMatrix(self.entries + (row,))


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular U, V and diagonal D with U * A * V = D and d1 | d2 | ...

    `diagonal` lists the invariant factors (nonnegative), padded with zeros
    up to min(nrows, ncols) of the original matrix.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        n = min(self.D.nrows, self.D.ncols)
        return tuple(self.D.entries[i][i] for i in range(n))


def _pivot_min_abs(M, k, nrows, ncols):
    """Nonzero entry of M[k:, k:] of least absolute value; ties by (row, col).

    Minimality of the pivot is what makes the remainder loop in
    `smith_normal_form` terminate: any nonzero remainder it produces is
    strictly smaller in absolute value than the current minimum.
    """
    best = None
    where = None
    for i in range(k, nrows):
        row = M[i]
        for j in range(k, ncols):
            x = row[j]
            if x:
                a = -x if x < 0 else x
                if best is None or a < best:
                    best = a
                    where = (i, j)
                    if a == 1:
                        return where
    return where


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transforms: U * A * V = D, d1 | d2 | ...

    Deterministic: the pivot is always the nonzero entry of the working
    submatrix with the least absolute value, ties broken by (row, col).
    The result is verified by multiplication before being returned.
    """
    r, c = A.nrows, A.ncols
    D = [list(row) for row in A.entries]
    U = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    V = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    for k in range(min(r, c)):
        while True:
            piv = _pivot_min_abs(D, k, r, c)
            if piv is None:
                break
            i0, j0 = piv
            if i0 != k:
                D[k], D[i0] = D[i0], D[k]
                U[k], U[i0] = U[i0], U[k]
            if j0 != k:
                for row in D:
                    row[k], row[j0] = row[j0], row[k]
                for row in V:
                    row[k], row[j0] = row[j0], row[k]
            # Reduce the pivot column, then the pivot row.  If any remainder
            # survives, a smaller pivot now exists and we start over.
            dirty = False
            p = D[k][k]
            for i in range(k + 1, r):
                q, rem = divmod(D[i][k], p)
                if q:
                    D[i] = [a - q * b for a, b in zip(D[i], D[k])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[k])]
                if rem:
                    dirty = True
            if dirty:
                continue
            for j in range(k + 1, c):
                q, rem = divmod(D[k][j], p)
                if q:
                    for row in D:
                        row[j] -= q * row[k]
                    for row in V:
                        row[j] -= q * row[k]
                if rem:
                    dirty = True
            if dirty:
                continue
            # Pivot must divide the entire remaining submatrix for the
            # divisibility chain; if not, fold the offending row in and redo.
            offender = None
            for i in range(k + 1, r):
                for j in range(k + 1, c):
                    if D[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            D[k] = [a + b for a, b in zip(D[k], D[offender])]
            U[k] = [a + b for a, b in zip(U[k], U[offender])]
        if piv is None:
            break

    for k in range(min(r, c)):
        if D[k][k] < 0:
            D[k] = [-x for x in D[k]]
            U[k] = [-x for x in U[k]]

    dec = SmithDecomposition(
        U=IntMatrix.from_rows(U), D=IntMatrix.from_rows(D), V=IntMatrix.from_rows(V)
    )
    _verify_smith(A, dec)
    return dec


def _verify_smith(A: IntMatrix, dec: SmithDecomposition):
    prod = dec.U.mul(A).mul(dec.V)
    if prod != dec.D:
        raise AssertionError("Smith decomposition failed verification: UAV != D")
    if abs(determinant(dec.U)) != 1 or abs(determinant(dec.V)) != 1:
        raise AssertionError("Smith transform is not unimodular")
    d = dec.diagonal
    for a, b in zip(d, d[1:]):
        if a == 0 and b != 0:
            raise AssertionError("zero invariant factor precedes a nonzero one")
        if a and b % a:
            raise AssertionError("divisibility chain violated")


def determinant(A: IntMatrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = A.nrows
    if n != A.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [list(row) for row in A.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        p = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * p - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = p
    return sign * M[n - 1][n - 1]


def _bareiss_rank_pivots(rows: list[list[int]], ncols: int) -> tuple[int, tuple[int, ...]]:
    """Rank and pivot columns of an integer matrix by fraction-free elimination.

    Full pivoting with the least-absolute-value rule; the returned pivot
    columns are indices into the original column order.
    """
    M = [row[:] for row in rows]
    nrows = len(M)
    colperm = list(range(ncols))
    prev = 1
    rank = 0
    for k in range(min(nrows, ncols)):
        piv = _pivot_min_abs(M, k, nrows, ncols)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != k:
            M[k], M[i0] = M[i0], M[k]
        if j0 != k:
            for row in M:
                row[k], row[j0] = row[j0], row[k]
            colperm[k], colperm[j0] = colperm[j0], colperm[k]
        p = M[k][k]
        for i in range(k + 1, nrows):
            mik = M[i][k]
            row_i = M[i]
            row_k = M[k]
            # Bareiss update: applied even when mik == 0, since the division
            # by the previous pivot keeps entries at their fraction-free size.
            for j in range(k + 1, ncols):
                row_i[j] = (row_i[j] * p - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = p
        rank += 1
    return rank, tuple(sorted(colperm[:rank]))


def _integerize_rows(A: RatMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for row in A.entries:
        scale = lcm(*(f.denominator for f in row)) if row else 1
        out.append([int(f * scale) for f in row])
    return out


def rank(A: RatMatrix) -> int:
    """Exact rank of a rational matrix via fraction-free elimination."""
    if A.nrows == 0 or A.ncols == 0:
        return 0
    r, _ = _bareiss_rank_pivots(_integerize_rows(A), A.ncols)
    return r


def rank_and_pivot_columns(A: RatMatrix) -> tuple[int, tuple[int, ...]]:
    """Rank plus a deterministic set of pivot columns of the row space."""
    if A.nrows == 0 or A.ncols == 0:
        return 0, ()
    return _bareiss_rank_pivots(_integerize_rows(A), A.ncols)


def row_space_membership(A: RatMatrix, v) -> bool:
    """True iff v lies in the row space of A (rank does not grow)."""
    vec = tuple(Fraction(x) for x in v)
    if A.nrows == 0:
        return all(x == 0 for x in vec)
    if len(vec) != A.ncols:
        raise DimensionMismatch("vector length does not match column count")
    return rank(A) == rank(A.stack_row(vec))


def solve_integer(A: IntMatrix, b) -> tuple[int, ...] | None:
    """Some integer solution x of A x = b, or None when none exists.

    Works through the Smith decomposition: with U A V = D the system
    becomes D y = U b, which is solvable iff each d_i divides (U b)_i
    (and the zero rows of D annihilate U b); then x = V y.
    """
    bvec = tuple(int(x) for x in b)
    if len(bvec) != A.nrows:
        raise DimensionMismatch("right-hand side length does not match row count")
    dec = smith_normal_form(A)
    ub = dec.U.mul_vector(bvec)
    y = [0] * A.ncols
    for i, t in enumerate(ub):
        d = dec.D.entries[i][i] if i < min(A.nrows, A.ncols) else 0
        if d == 0:
            if t != 0:
                return None
        else:
            q, rem = divmod(t, d)
            if rem:
                return None
            y[i] = q
    x = dec.V.mul_vector(tuple(y))
    if A.mul_vector(x) != bvec:
        raise AssertionError("integer solve failed verification")
    return x
