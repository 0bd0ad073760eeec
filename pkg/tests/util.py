"""Shared random generators for the property tests. Everything is seeded."""

from random import Random

from qfact.errors import DegenerateHull
from qfact.lattice import convex_hull, is_simplicial, lattice_points, normal_fan
from qfact.laurent import LaurentPolynomial
from qfact.toric import build_toric_data


def random_int_matrix(rng: Random, nrows: int, ncols: int, bound: int = 9):
    return [
        [rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)
    ]


def random_polytope(rng: Random, bound: int = 3, npoints: int = 8):
    """Full-dimensional hull of a few random points in a small box."""
    while True:
        pts = [
            tuple(rng.randint(-bound, bound) for _ in range(3))
            for _ in range(npoints)
        ]
        try:
            return convex_hull(pts)
        except DegenerateHull:
            continue


def random_simplicial_polytope(rng: Random, bound: int = 2, npoints: int = 6):
    """Random polytope whose normal fan is simplicial (redraw until so)."""
    while True:
        P = random_polytope(rng, bound=bound, npoints=npoints)
        if is_simplicial(normal_fan(P)):
            return P


def random_support_polynomial(P, rng: Random, bound: int = 9):
    """Nonzero coefficients on the full lattice support of a polytope."""
    pairs = []
    for m in lattice_points(P):
        k = rng.randrange(2 * bound)
        pairs.append((m, k - bound if k < bound else k - bound + 1))
    return LaurentPolynomial.from_terms(pairs)


def random_unimodular(rng: Random, shears: int = 6):
    """Random GL(3, Z) matrix as a product of elementary shears and swaps."""
    A = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(shears):
        i, j = rng.sample(range(3), 2)
        k = rng.choice((-2, -1, 1, 2))
        for col in range(3):
            A[i][col] += k * A[j][col]
        if rng.random() < 0.3:
            a, b = rng.sample(range(3), 2)
            A[a], A[b] = A[b], A[a]
        if rng.random() < 0.3:
            i = rng.randrange(3)
            A[i] = [-x for x in A[i]]
    return tuple(tuple(row) for row in A)


def apply_matrix(A, v):
    return tuple(sum(A[i][j] * v[j] for j in range(3)) for i in range(3))


def transform_polynomial(F: LaurentPolynomial, A) -> LaurentPolynomial:
    """Exponent substitution t -> t^A, i.e. m maps to A m."""
    return LaurentPolynomial.from_terms(
        (apply_matrix(A, e), c) for e, c in F.terms
    )


def toric_of(P):
    return build_toric_data(normal_fan(P))
