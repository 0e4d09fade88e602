"""The four special families, and why a pre-kite in any of them is a kite.

Orthocentric, circumscriptible, isodynamic, and tetra-isogonic
simplices each admit a vector of per-vertex weights that reproduces
every edge through a fixed formula.  Those weights are unique, so
membership testing is recovery plus verification.  Intersecting any of
the four families with the pre-kites collapses to the kites (all apex
edges equal), which the classifier demonstrates on examples and fuzz.
"""

import random
from fractions import Fraction

from simplexkite import (
    PreKite,
    Realizability,
    SquaredDistanceMatrix,
    classify,
    find_apexes,
    is_realizable,
    matrix_from_beta,
    recover_circumscriptible,
    recover_isodynamic,
    recover_orthocentric,
    recover_tetra_isogonic,
)

print(__doc__)

print("Recovery on handmade kites (apex weight 2, base weights 1):")
examples = [
    ("circumscriptible", PreKite(3, 4, (9, 9, 9)), recover_circumscriptible,
     "edge length = b_i + b_j: base 1+1 = 2, apex 2+1 = 3"),
    ("isodynamic", PreKite(3, 1, (2, 2, 2)), recover_isodynamic,
     "squared edge = b_i*b_j: base 1*1 = 1, apex 2*1 = 2"),
    ("tetra_isogonic", PreKite(3, 3, (7, 7, 7)), recover_tetra_isogonic,
     "squared edge = b_i**2 + b_i*b_j + b_j**2: base 3, apex 4+2+1 = 7"),
]
for name, pk, recover, story in examples:
    vec = recover(pk.to_sdm())
    print("  %-16s beta = %s   (%s)" % (name, tuple(round(float(b), 10) for b in vec.beta), story))

print()
print("Orthocentric recovery is exact rational; weights may even vanish")
print("or go negative (right-corner and obtuse orthocentric simplices):")
m = matrix_from_beta("orthocentric", (Fraction(0), 1, 2, 3))
vec = recover_orthocentric(m)
print("  forward-built from (0, 1, 2, 3), recovered:", vec.beta, " residual:", vec.residual)

print()
print("The two-apexed tetrahedron PK[3; 1; (1, 1, 2)] joins no family:")
d = PreKite(3, 1, (1, 1, 2)).to_sdm()
for recover in (recover_orthocentric, recover_circumscriptible, recover_isodynamic, recover_tetra_isogonic):
    print("  %-28s -> %s" % (recover.__name__, recover(d)))

print()
print("Full classification of the tetra-isogonic kite:")
report = classify(PreKite(3, 3, (7, 7, 7)).to_sdm())
print(" ", report.to_json())

print()
print("Fuzz: random family members that happen to be pre-kites are kites.")
rng = random.Random(3)
families = {
    "orthocentric": recover_orthocentric,
    "circumscriptible": recover_circumscriptible,
    "isodynamic": recover_isodynamic,
    "tetra_isogonic": recover_tetra_isogonic,
}
checked = 0
for name, recover in sorted(families.items()):
    done = 0
    while done < 40:
        count = rng.randint(4, 6)
        apex = Fraction(rng.randint(2, 9), 4)
        tail = Fraction(rng.randint(2, 9), 4)
        d = matrix_from_beta(name, (apex,) + (tail,) * (count - 1))
        if is_realizable(d).status is not Realizability.NONDEGENERATE:
            continue
        assert recover(d) is not None
        report = find_apexes(d)
        assert report.apexes and report.is_kite
        done += 1
        checked += 1
print("  %d member pre-kites across the four families: all kites" % checked)

print()
print("And the regular simplex belongs to every family at once:")
reg = classify(SquaredDistanceMatrix.regular(3))
print(" ", {name: entry["member"] for name, entry in reg.to_json()["families"].items()})
