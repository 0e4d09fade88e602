"""Pre-kites: closed forms, apex census, and the feasibility window.

A pre-kite PK[n; u; v1..vn] is a simplex with a regular facet: edges
among vertices 1..n all have squared length u, and vertex 0 (the apex)
reaches vertex i at squared length v_i.  Its Cayley-Menger determinants
and those of all its facets reduce to closed forms in the power sums of
the parameters, which this script checks against brute force and then
uses to map out exactly which single-odd-edge simplices exist.
"""

import random
from fractions import Fraction

from simplexkite import (
    PreKite,
    apex_squared_ratio_window,
    cm_det,
    facet_sdm,
    find_apexes,
    inner_cm_det,
    pk_cm_det,
    pk_facet_cm,
    pk_inner_cm_det,
    two_apexed,
    two_apexed_feasible,
)

print(__doc__)

pk = PreKite(3, 1, (1, 1, 2))
d = pk.to_sdm()
print("PK[3; 1; (1, 1, 2)] - a tetrahedron with a single squared-2 edge:")
print("  closed-form CM det:   ", pk_cm_det(pk), " generic:", cm_det(d))
print("  closed-form inner det:", pk_inner_cm_det(pk), "generic:", inner_cm_det(d))
print("  circumradius squared: ", -pk_inner_cm_det(pk) / (2 * pk_cm_det(pk)))
report = find_apexes(d)
print("  apexes:", report.apexes, " kite:", report.is_kite, " regular:", report.is_regular)
print("  (both facets opposite the long edge are unit equilateral, so this")
print("   pre-kite has two apexes; its facet census shows it)")
for j in range(4):
    vals = sorted(str(v) for _, _, v in facet_sdm(d, j).edges())
    print("    facet %d squared edges: %s" % (j, vals))

print()
print("Per-facet closed forms on PK[4; 1; (1, 1, 1, 2)]:")
pk4 = PreKite(4, 1, (1, 1, 1, 2))
for j in range(5):
    closed = pk_facet_cm(pk4, j)
    generic = cm_det(facet_sdm(pk4.to_sdm(), j))
    print("  facet %d: closed %s  generic %s" % (j, closed, generic))
print("  all five facet determinants are equal: the facets all have the")
print("  same volume although the simplex is visibly not regular.")

print()
print("Random cross-check of the closed forms:")
rng = random.Random(1)
for _ in range(500):
    n = rng.randint(2, 6)
    u = Fraction(rng.randint(1, 8), rng.randint(1, 3))
    v = [u * Fraction(rng.randint(1, 12), 4) for _ in range(n)]
    q = PreKite(n, u, v)
    assert pk_cm_det(q) == cm_det(q.to_sdm())
    assert pk_inner_cm_det(q) == inner_cm_det(q.to_sdm())
print("  500 random pre-kites: closed forms match brute force exactly")

print()
print("When does an n-simplex with one odd edge exist?  Write the odd")
print("squared edge as v and the common squared edge as u.  The window")
print("for v/u is open with an exact algebraic boundary:")
for n in range(2, 9):
    lo, hi = apex_squared_ratio_window(n)
    at_boundary = pk_cm_det(two_apexed(n, 1, hi))
    print("  n = %d: v/u in (0, %s); CM det at the boundary = %s" % (n, hi, at_boundary))

print()
print("Sampling the window at n = 4 (u = 1):")
for v in (Fraction(1, 2), 1, 2, Fraction(8, 3), 3):
    verdict = "exists" if two_apexed_feasible(4, 1, v) else "does not exist"
    print("  squared odd edge %-4s -> %s" % (v, verdict))
