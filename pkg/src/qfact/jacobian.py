"""Graded pieces of the coordinate ring modulo the partial-derivative ideal,
and the surjectivity test for the multiplication map between them.

Everything reduces to exact rank computations: a graded piece is a monomial
basis plus the rows spanning the ideal's slice in that basis, and the
quotient dimension is basis size minus row rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .errors import DegreeMismatch
from .laurent import CoxPolynomial, partial_derivatives
from .linalg import RatMatrix, rank, rank_and_pivot_columns
from .toric import (
    CoxMonomial,
    GradedDegree,
    ToricData,
    anticanonical_degree,
    monomials_of_degree,
)


@dataclass(frozen=True)
class GradedPiece:
    """One degree slice: monomial basis, ideal rows, quotient dimension."""

    degree: GradedDegree
    monomial_basis: tuple[CoxMonomial, ...]
    jacobian_rows: RatMatrix
    jacobian_rank: int
    pivot_columns: tuple[int, ...]

    @property
    def s_dimension(self) -> int:
        return len(self.monomial_basis)

    @property
    def r_dimension(self) -> int:
        return len(self.monomial_basis) - self.jacobian_rank

    def quotient_representatives(self) -> tuple[CoxMonomial, ...]:
        """Monomials spanning the quotient: those off the pivot columns."""
        taken = set(self.pivot_columns)
        return tuple(
            m for j, m in enumerate(self.monomial_basis) if j not in taken
        )


@dataclass(frozen=True)
class SurjectivityVerdict:
    """Outcome of the multiplication-map rank test.

    dims holds the quotient dimensions at (top-left, bottom-left, target)
    degrees; image_rank is the rank of product rows stacked on the ideal
    rows inside the target degree, to be compared with target_needed, the
    full dimension of that degree's monomial basis.
    """

    surjective: bool
    dims: tuple[int, int, int]
    image_rank: int
    target_needed: int


def _monomial_shift(m: CoxMonomial, poly: CoxPolynomial):
    for e, c in poly.terms:
        yield tuple(a + b for a, b in zip(m, e)), c


def graded_piece(f: CoxPolynomial, T: ToricData, gamma: GradedDegree) -> GradedPiece:
    """Degree-gamma slice of the ring modulo the partials of f.

    The ideal's slice is spanned by monomial multiples of the partials:
    for the i-th partial (of degree beta - deg z_i) every monomial of
    degree gamma - (beta - deg z_i) contributes one row.
    """
    basis = tuple(monomials_of_degree(T, gamma))
    index = {m: j for j, m in enumerate(basis)}
    rows = []
    for i, partial in enumerate(partial_derivatives(f, T)):
        if partial.is_zero:
            continue
        for m in monomials_of_degree(T, gamma - partial.degree):
            row = [Fraction(0)] * len(basis)
            for e, c in _monomial_shift(m, partial):
                row[index[e]] += c
            if any(row):
                rows.append(tuple(row))
    rows = list(dict.fromkeys(rows))
    matrix = RatMatrix(tuple(rows))
    if basis and rows:
        jrank, pivots = rank_and_pivot_columns(matrix)
    else:
        jrank, pivots = 0, ()
    return GradedPiece(
        degree=gamma,
        monomial_basis=basis,
        jacobian_rows=matrix,
        jacobian_rank=jrank,
        pivot_columns=pivots,
    )


def _representative_polynomials(
    piece: GradedPiece, lift_rng: Random | None
) -> list[CoxPolynomial]:
    """Coset representatives for a basis of the quotient at this degree.

    By default each representative is a single monomial off the pivot
    columns. With a generator supplied, every representative is perturbed
    by a random combination of ideal rows; the ideal absorbs such shifts,
    so any downstream verdict must not change.
    """
    reps = []
    for m in piece.quotient_representatives():
        pairs = [(m, Fraction(1))]
        if lift_rng is not None:
            for row in piece.jacobian_rows.entries:
                c = lift_rng.randint(-3, 3)
                if c:
                    pairs.extend(
                        (mon, c * coeff)
                        for mon, coeff in zip(piece.monomial_basis, row)
                        if coeff
                    )
        reps.append(CoxPolynomial.from_terms(pairs, piece.degree))
    return reps


def multiplication_surjective(
    f: CoxPolynomial,
    T: ToricData,
    beta: GradedDegree,
    beta0: GradedDegree,
    lift_rng: Random | None = None,
) -> SurjectivityVerdict:
    """Decide surjectivity of multiplication from degrees beta and
    beta - beta0 into degree 2*beta - beta0, all taken in the quotient ring.

    Representatives of quotient bases at the two source degrees are
    multiplied pairwise; the map is surjective exactly when those products
    together with the ideal's slice span the full target degree, which one
    rank computation on the stacked coefficient matrix decides. An empty
    target is vacuously surjective.
    """
    if f.degree != beta:
        raise DegreeMismatch("polynomial degree is not the declared beta")
    if anticanonical_degree(T) != beta0:
        raise DegreeMismatch("beta0 is not the anticanonical degree")

    top = graded_piece(f, T, beta + beta - beta0)
    left = graded_piece(f, T, beta)
    right = graded_piece(f, T, beta - beta0)
    dims = (left.r_dimension, right.r_dimension, top.r_dimension)

    target_needed = top.s_dimension
    if target_needed == 0:
        return SurjectivityVerdict(
            surjective=True, dims=dims, image_rank=0, target_needed=0
        )

    basis = list(top.monomial_basis)
    product_rows = []
    for a in _representative_polynomials(left, lift_rng):
        for b in _representative_polynomials(right, lift_rng):
            row = (a * b).coordinates(basis)
            if any(row):
                product_rows.append(row)
    stacked = list(dict.fromkeys(product_rows)) + list(top.jacobian_rows.entries)
    image_rank = rank(RatMatrix(tuple(stacked))) if stacked else 0
    return SurjectivityVerdict(
        surjective=image_rank == target_needed,
        dims=dims,
        image_rank=image_rank,
        target_needed=target_needed,
    )


def hilbert_profile(
    f: CoxPolynomial, T: ToricData, degrees
) -> list[tuple[GradedDegree, int, int, int]]:
    """Per-degree table (degree, dim S, rank J, dim R) for reporting."""
    out = []
    for gamma in degrees:
        piece = graded_piece(f, T, gamma)
        out.append((gamma, piece.s_dimension, piece.jacobian_rank, piece.r_dimension))
    return out
