"""Integer convex geometry in rank 3: hulls, facets, faces, normal fans.

All computations are exact over the integers. A polytope is stored by its
vertex set together with primitive inner-normal facet inequalities
``<m, normal> >= -offset``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .errors import DegenerateHull
from .linalg import RatMatrix, rank

Vec3 = tuple[int, int, int]


def dot(a: Vec3, b: Vec3) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def sub(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def neg(a: Vec3) -> Vec3:
    return (-a[0], -a[1], -a[2])


def cross(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def primitive(v: Vec3) -> Vec3:
    g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return (v[0] // g, v[1] // g, v[2] // g)


def affine_rank(points) -> int:
    """Dimension of the affine span of a point set (0 for a single point)."""
    pts = list(points)
    if len(pts) <= 1:
        return 0
    base = pts[0]
    return rank(RatMatrix.from_rows([sub(p, base) for p in pts[1:]]))


@dataclass(frozen=True)
class Facet:
    """Half-space <m, normal> >= -offset, tight on the facet itself."""

    normal: Vec3
    offset: int

    def value(self, point: Vec3) -> int:
        return dot(self.normal, point) + self.offset


@dataclass(frozen=True)
class LatticePolytope:
    """Full-dimensional lattice polytope: sorted vertices, sorted facets."""

    vertices: tuple[Vec3, ...]
    facets: tuple[Facet, ...]

    def contains(self, point: Vec3) -> bool:
        return all(f.value(point) >= 0 for f in self.facets)

    def facet_vertex_indices(self, facet: Facet) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.vertices) if facet.value(v) == 0)


@dataclass(frozen=True)
class NormalFan:
    """Inner-normal fan: rays in facet order, one maximal cone per vertex."""

    rays: tuple[Vec3, ...]
    maximal_cones: tuple[tuple[int, ...], ...]


def _independent_seed(points):
    """Four affinely independent points, or None if the set is degenerate."""
    p0 = points[0]
    p1 = next((p for p in points if p != p0), None)
    if p1 is None:
        return None
    p2 = next((p for p in points if cross(sub(p1, p0), sub(p, p0)) != (0, 0, 0)), None)
    if p2 is None:
        return None
    n = cross(sub(p1, p0), sub(p2, p0))
    p3 = next((p for p in points if dot(n, sub(p, p0)) != 0), None)
    if p3 is None:
        return None
    return p0, p1, p2, p3


def _supporting_facet(apex: Vec3, u: Vec3, w: Vec3, cloud) -> Facet | None:
    """Facet of conv(cloud) spanned by apex, u, w, when that plane supports."""
    n = cross(sub(u, apex), sub(w, apex))
    if n == (0, 0, 0):
        return None
    n = primitive(n)
    base = dot(n, apex)
    lo = hi = 0
    for q in cloud:
        s = dot(n, q) - base
        if s < lo:
            lo = s
        elif s > hi:
            hi = s
        if lo < 0 and hi > 0:
            return None
    if lo == 0:
        return Facet(normal=n, offset=-base)
    return Facet(normal=neg(n), offset=base)


def convex_hull(points) -> LatticePolytope:
    """Exact convex hull of integer points; requires affine dimension 3.

    Incremental over facet planes: each new outside point contributes the
    supporting planes through itself and pairs of current vertices, old
    facets survive when not violated, and a point stays a vertex exactly
    when its tight facet normals span rank 3.
    """
    pts = sorted({(int(p[0]), int(p[1]), int(p[2])) for p in points})
    if not pts:
        raise DegenerateHull("empty point set")
    seed = _independent_seed(pts)
    if seed is None:
        raise DegenerateHull(
            f"points span affine dimension {affine_rank(pts)}, need 3"
        )

    facets: set[Facet] = set()
    for a, b, c in combinations(seed, 3):
        (d,) = [p for p in seed if p not in (a, b, c)]
        n = cross(sub(b, a), sub(c, a))
        if dot(n, sub(d, a)) < 0:
            n = neg(n)
        n = primitive(n)
        facets.add(Facet(normal=n, offset=-dot(n, a)))
    vertices = set(seed)

    for p in sorted(q for q in pts if q not in vertices):
        if all(f.value(p) >= 0 for f in facets):
            continue
        survivors = {f for f in facets if f.value(p) >= 0}
        cloud = sorted(vertices) + [p]
        fresh = set()
        for u, w in combinations(sorted(vertices), 2):
            f = _supporting_facet(p, u, w, cloud)
            if f is not None:
                fresh.add(f)
        facets = survivors | fresh
        vertices = {
            q
            for q in cloud
            if rank(RatMatrix.from_rows([f.normal for f in facets if f.value(q) == 0]))
            == 3
        }

    vlist = tuple(sorted(vertices))
    flist = tuple(sorted(facets, key=lambda f: (f.normal, f.offset)))
    for f in flist:
        tight = [v for v in vlist if f.value(v) == 0]
        if affine_rank(tight) != 2:
            raise AssertionError("facet not supported by 3 independent vertices")
    return LatticePolytope(vertices=vlist, facets=flist)


def lattice_points(P: LatticePolytope) -> list[Vec3]:
    """All points of P intersected with the integer lattice, in lex order.

    Bounding-box scan filtered by the facet inequalities; cost is the box
    volume, which is fine at the coordinate sizes Newton polytopes have.
    """
    los = [min(v[i] for v in P.vertices) for i in range(3)]
    his = [max(v[i] for v in P.vertices) for i in range(3)]
    out = []
    for x in range(los[0], his[0] + 1):
        for y in range(los[1], his[1] + 1):
            for z in range(los[2], his[2] + 1):
                if P.contains((x, y, z)):
                    out.append((x, y, z))
    return out


def faces(P: LatticePolytope) -> list[tuple[int, tuple[int, ...]]]:
    """All faces as (dimension, vertex indices), dimensions 0 through 3.

    Proper faces are exactly the nonempty intersections of facets, and a
    face's vertex set is the intersection of its facets' vertex sets, so
    closing the facet incidence sets under pairwise meet enumerates them.
    """
    generators = [frozenset(P.facet_vertex_indices(f)) for f in P.facets]
    closure = set(generators)
    frontier = set(generators)
    while frontier:
        new = set()
        for a in frontier:
            for b in generators:
                c = a & b
                if c and c not in closure:
                    new.add(c)
        closure |= new
        frontier = new
    closure.add(frozenset(range(len(P.vertices))))
    out = [
        (affine_rank([P.vertices[i] for i in s]), tuple(sorted(s))) for s in closure
    ]
    return sorted(out)


def normal_fan(P: LatticePolytope) -> NormalFan:
    """Inner-normal fan: rays follow facet order, cones follow vertex order."""
    cones = []
    for v in P.vertices:
        cones.append(tuple(i for i, f in enumerate(P.facets) if f.value(v) == 0))
    return NormalFan(
        rays=tuple(f.normal for f in P.facets), maximal_cones=tuple(cones)
    )


def is_simplicial(fan: NormalFan) -> bool:
    """True iff every maximal cone is spanned by 3 independent rays."""
    for cone in fan.maximal_cones:
        if len(cone) != 3:
            return False
        if rank(RatMatrix.from_rows([fan.rays[i] for i in cone])) != 3:
            return False
    return True
