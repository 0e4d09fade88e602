"""Squared-distance matrices: volume, circumradius, realizability.

A simplex is described here purely by its squared pairwise distances.
The bordered Cayley-Menger determinant turns that table into the
squared volume, the same determinant without its border adds the
squared circumradius, and the Gram matrix settles whether the numbers
are realizable in Euclidean space at all.  Everything below is exact
rational arithmetic.
"""

from fractions import Fraction

from simplexkite import (
    SquaredDistanceMatrix,
    circumradius_sq,
    cm_det,
    embed,
    facet_sdm,
    inner_cm_det,
    is_realizable,
    volume_sq,
)

print(__doc__)

print("The unit-edge regular tetrahedron (all squared distances 1):")
d = SquaredDistanceMatrix.regular(3)
print("  Cayley-Menger determinant:", cm_det(d))
print("  inner determinant:        ", inner_cm_det(d))
print("  squared volume:           ", volume_sq(d), "(so V = 1/(6*sqrt(2)))")
print("  squared circumradius:     ", circumradius_sq(d))

print()
print("The circumradius constant n/(2(n+1)) for unit regular simplices:")
for n in range(2, 9):
    r2 = circumradius_sq(SquaredDistanceMatrix.regular(n))
    print("  n = %d: R**2 = %s" % (n, r2))

print()
print("Realizability is decided by the inertia of the Gram matrix:")
cases = {
    "equilateral, squared sides (1, 1, 1)": [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
    "collinear, squared sides (1, 1, 4)": [[0, 1, 4], [1, 0, 1], [4, 1, 0]],
    "impossible, squared sides (1, 1, 9)": [[0, 1, 9], [1, 0, 1], [9, 1, 0]],
}
for label, rows in cases.items():
    verdict = is_realizable(SquaredDistanceMatrix(rows))
    print("  %-38s -> %-13s inertia %s" % (label, verdict.status.value, verdict.gram_inertia))

print()
print("A 3-4-5 right triangle, exactly:")
tri = SquaredDistanceMatrix([[0, 9, 16], [9, 0, 25], [16, 25, 0]])
print("  area**2 =", volume_sq(tri), "(area 6)")
print("  R**2    =", circumradius_sq(tri), "(hypotenuse/2 squared)")

print()
print("Facets are just deletions; here is vertex 2 removed from the triangle:")
print("  ", facet_sdm(tri, 2).to_json())

print()
print("Floating point enters only when coordinates are wanted:")
s = embed(tri)
print("  vertices:")
for row in s.vertices:
    print("    (%9.6f, %9.6f)" % tuple(row))
print("  worst relative distance error: %.2e" % s.max_rel_error)
