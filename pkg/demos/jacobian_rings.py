"""Graded pieces of the Jacobian quotient and the multiplication map test.

The quartic surface certifies; the cubic is the classical boundary case
where the multiplication map fails to be surjective.
"""

from qfact import (
    GradedDegree,
    anticanonical_degree,
    build_toric_data,
    convex_hull,
    graded_piece,
    hilbert_profile,
    homogenize,
    multiplication_surjective,
    normal_fan,
    parse_laurent,
    polytope_degree,
)

simplex = convex_hull([(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4)])
T = build_toric_data(normal_fan(simplex))
fermat = homogenize(parse_laurent("x^4 + y^4 + z^4 + 1"), simplex, T)
beta = polytope_degree(T, simplex)
beta0 = anticanonical_degree(T)

print("Fermat quartic, degree-by-degree quotient dimensions:")
degrees = [
    GradedDegree(free_part=(k,), torsion_part=(), torsion_moduli=())
    for k in range(9)
]
for gamma, s, j, r in hilbert_profile(fermat, T, degrees):
    print(f"  degree {gamma.free_part[0]}: dim S = {s:3d}  rank J = {j:3d}  dim R = {r:3d}")
# the profile is a palindrome; the top of the ring sits in degree 8

piece = graded_piece(fermat, T, beta)
print("\nquotient representatives in degree beta:", len(piece.quotient_representatives()))

v = multiplication_surjective(fermat, T, beta, beta0)
print(
    "multiplication map at (beta, beta - beta0):",
    f"image rank {v.image_rank} of {v.target_needed} needed ->",
    "surjective" if v.surjective else "not surjective",
)
print("quotient dimensions (left, right, target):", v.dims)

# the cubic boundary case: the target quotient has dimension 6 but the
# image only reaches the 4-dimensional span of the partials
cubic = convex_hull([(0, 0, 0), (3, 0, 0), (0, 3, 0), (0, 0, 3)])
Tc = build_toric_data(normal_fan(cubic))
fc = homogenize(parse_laurent("x^3 + y^3 + z^3 + 1"), cubic, Tc)
vc = multiplication_surjective(fc, Tc, polytope_degree(Tc, cubic), anticanonical_degree(Tc))
print("\ncubic:", f"image rank {vc.image_rank} of {vc.target_needed} ->", vc.surjective)
print("cubic quotient dimensions:", vc.dims)
