"""Toric data from a complete simplicial fan: class-group grading of the
homogeneous coordinate ring, distinguished degrees, graded monomial bases.

The class group is the cokernel of the n x 3 ray matrix, presented through
a Smith decomposition. Degrees live in Smith coordinates: a free part of
length n - 3 and residues modulo the torsion invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, floor

from .errors import FanMismatch, NotSimplicial
from .lattice import LatticePolytope, NormalFan, Vec3, dot, is_simplicial, normal_fan
from .linalg import IntMatrix, SmithDecomposition, smith_normal_form, solve_integer

# Exponent vector of a monomial in the homogeneous coordinate ring: one
# nonnegative entry per ray.
CoxMonomial = tuple[int, ...]


@dataclass(frozen=True)
class GradedDegree:
    """Class-group element in Smith coordinates.

    free_part has one entry per free generator (n - 3 of them), torsion_part
    one canonical residue per invariant factor listed in torsion_moduli.
    """

    free_part: tuple[int, ...]
    torsion_part: tuple[int, ...]
    torsion_moduli: tuple[int, ...]

    def __post_init__(self):
        if len(self.torsion_part) != len(self.torsion_moduli):
            raise ValueError("torsion residue count does not match moduli")
        if any(not 0 <= r < d for r, d in zip(self.torsion_part, self.torsion_moduli)):
            raise ValueError("torsion residue out of canonical range")

    def _compatible(self, other: "GradedDegree"):
        if (
            len(self.free_part) != len(other.free_part)
            or self.torsion_moduli != other.torsion_moduli
        ):
            raise ValueError("degrees from different class groups")

    def __add__(self, other: "GradedDegree") -> "GradedDegree":
        self._compatible(other)
        return GradedDegree(
            free_part=tuple(a + b for a, b in zip(self.free_part, other.free_part)),
            torsion_part=tuple(
                (a + b) % d
                for a, b, d in zip(
                    self.torsion_part, other.torsion_part, self.torsion_moduli
                )
            ),
            torsion_moduli=self.torsion_moduli,
        )

    def __sub__(self, other: "GradedDegree") -> "GradedDegree":
        self._compatible(other)
        return GradedDegree(
            free_part=tuple(a - b for a, b in zip(self.free_part, other.free_part)),
            torsion_part=tuple(
                (a - b) % d
                for a, b, d in zip(
                    self.torsion_part, other.torsion_part, self.torsion_moduli
                )
            ),
            torsion_moduli=self.torsion_moduli,
        )

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.free_part) and all(
            r == 0 for r in self.torsion_part
        )


@dataclass(frozen=True)
class ToricData:
    """Rays plus the Smith presentation of their cokernel (the class group)."""

    rays: tuple[Vec3, ...]
    class_rank: int
    torsion: tuple[int, ...]
    smith: SmithDecomposition
    variable_degrees: tuple[GradedDegree, ...]

    @property
    def nrays(self) -> int:
        return len(self.rays)

    def degree_of_exponents(self, exponents) -> GradedDegree:
        """Image of an integer exponent vector in the class group."""
        e = tuple(int(x) for x in exponents)
        u = self.smith.U.mul_vector(e)
        d = self.smith.diagonal
        return GradedDegree(
            free_part=u[3:],
            torsion_part=tuple(
                u[i] % d[i] for i in range(3) if d[i] > 1
            ),
            torsion_moduli=self.torsion,
        )

    def zero_degree(self) -> GradedDegree:
        return GradedDegree(
            free_part=(0,) * self.class_rank,
            torsion_part=(0,) * len(self.torsion),
            torsion_moduli=self.torsion,
        )


def build_toric_data(fan: NormalFan) -> ToricData:
    """Class group and variable degrees of the fan's coordinate ring.

    Presentation: Smith decomposition U R V = D of the ray matrix R whose
    rows are the rays, so the cokernel is Z^n / D Z^3 in U-coordinates.
    Rows of U beyond the first three are sign-normalized to make the free
    coordinates of the anticanonical class nonnegative; those rows satisfy
    (U R) = 0 there, so flipping them preserves the decomposition.
    """
    if not is_simplicial(fan):
        sizes = sorted({len(c) for c in fan.maximal_cones})
        raise NotSimplicial(
            f"maximal cones must have 3 independent rays, found cone sizes {sizes}"
        )
    n = len(fan.rays)
    ray_matrix = IntMatrix.from_rows(fan.rays)
    dec = smith_normal_form(ray_matrix)
    diag = dec.diagonal
    if len(diag) != 3 or any(d == 0 for d in diag):
        raise NotSimplicial("rays do not span the lattice over the rationals")

    u_rows = [list(r) for r in dec.U.entries]
    for i in range(3, n):
        if sum(u_rows[i]) < 0:
            u_rows[i] = [-x for x in u_rows[i]]
    dec = SmithDecomposition(U=IntMatrix.from_rows(u_rows), D=dec.D, V=dec.V)

    torsion = tuple(d for d in diag if d > 1)
    torsion_slots = [i for i in range(3) if diag[i] > 1]
    degrees = tuple(
        GradedDegree(
            free_part=tuple(u_rows[i][j] for i in range(3, n)),
            torsion_part=tuple(u_rows[i][j] % diag[i] for i in torsion_slots),
            torsion_moduli=torsion,
        )
        for j in range(n)
    )
    data = ToricData(
        rays=fan.rays,
        class_rank=n - 3,
        torsion=torsion,
        smith=dec,
        variable_degrees=degrees,
    )

    # The lattice must map to the identity class: degrees of exponent
    # vectors of the form (<m, v_1>, ..., <m, v_n>) vanish.
    for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        image = tuple(dot(m, v) for v in data.rays)
        if not data.degree_of_exponents(image).is_zero:
            raise AssertionError("lattice image has nonzero class; presentation broken")
    return data


def anticanonical_degree(T: ToricData) -> GradedDegree:
    """Degree of the product of all variables (minus the canonical class)."""
    return T.degree_of_exponents((1,) * T.nrays)


def polytope_degree(T: ToricData, P: LatticePolytope) -> GradedDegree:
    """Degree of the ample divisor the polytope induces on its own fan.

    The polytope's facet offsets, read in ray order, form the exponent
    vector of the divisor; its class is the degree every section carries.
    """
    fan = normal_fan(P)
    if fan.rays != T.rays:
        raise FanMismatch("polytope facet normals do not match the toric rays")
    offsets = tuple(f.offset for f in P.facets)
    return T.degree_of_exponents(offsets)


def picard_number(T: ToricData) -> int:
    return T.class_rank


def _fiber_polytope_vertices(rays, shift):
    """Vertices of { m in Q^3 : <m, v_i> >= -shift_i for all i }.

    Every vertex is cut out by three independent rows; Cramer's rule over
    exact rationals finds each candidate, and the remaining inequalities
    filter. Complete fans positively span, so this region is bounded.
    """
    n = len(rays)
    verts = []
    for subset in combinations(range(n), 3):
        a, b, c = (rays[i] for i in subset)
        det = (
            a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
        )
        if det == 0:
            continue
        rhs = [-shift[i] for i in subset]
        m = []
        for col in range(3):
            rows = [list(r) for r in (a, b, c)]
            for r, value in zip(rows, rhs):
                r[col] = value
            num = (
                rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
                - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
                + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
            )
            m.append(Fraction(num, det))
        if all(
            sum(Fraction(v[k]) * m[k] for k in range(3)) >= -shift[i]
            for i, v in enumerate(rays)
        ):
            verts.append(tuple(m))
    return verts


def monomials_of_degree(T: ToricData, gamma: GradedDegree) -> list[CoxMonomial]:
    """All nonnegative exponent vectors whose class equals gamma, lex sorted.

    One integer representative e0 always exists since U is invertible over
    the integers; the fiber over gamma is e0 shifted by the ray-matrix image
    of the lattice, so nonnegative members correspond to lattice points of a
    bounded rational polytope in the lattice of the torus.
    """
    n = T.nrays
    if gamma.torsion_moduli != T.torsion or len(gamma.free_part) != T.class_rank:
        raise ValueError("degree does not belong to this class group")
    target = [0] * n
    d = T.smith.diagonal
    t = 0
    for i in range(3):
        if d[i] > 1:
            target[i] = gamma.torsion_part[t]
            t += 1
    target[3:] = list(gamma.free_part)
    e0 = solve_integer(T.smith.U, target)
    if e0 is None:
        return []

    verts = _fiber_polytope_vertices(T.rays, e0)
    if not verts:
        return []
    out = []
    los = [floor(min(v[k] for v in verts)) for k in range(3)]
    his = [ceil(max(v[k] for v in verts)) for k in range(3)]
    for x in range(los[0], his[0] + 1):
        for y in range(los[1], his[1] + 1):
            for z in range(los[2], his[2] + 1):
                m = (x, y, z)
                e = tuple(e0[i] + dot(m, v) for i, v in enumerate(T.rays))
                if all(c >= 0 for c in e):
                    out.append(e)
    out.sort()
    return out
