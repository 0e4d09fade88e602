"""Exact center-coincidence predicates and the equiareal pre-kite solver.

The three classical coincidences are decided exactly from the distance
matrix alone: circumcenter = centroid is equivalent to well-distributed
edge lengths, incenter = centroid to equal facet volumes, and
circumcenter = incenter to equal facet circumradii together with an
interior circumcenter.  Fermat-Torricelli coincidences have no exact
characterization here and are reported only as float experiments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cayley import (
    SquaredDistanceMatrix,
    cm_det,
    cm_matrix,
    facet_sdm,
    circumradius_sq,
    require_nondegenerate,
    volume_sq,
)
from .exact import solve_linear
from .prekite import PreKite

_EQUIAREAL_CLAIM = "no non-regular equiareal pre-kite exists below dimension 6"


def _vertex_square_sums(d: SquaredDistanceMatrix) -> list[Fraction]:
    """Sum of squared edge lengths meeting each vertex."""
    return [sum(d.a[j][i] for i in range(d.n + 1) if i != j) for j in range(d.n + 1)]


def is_well_distributed(d: SquaredDistanceMatrix) -> bool:
    """Whether all facets have the same sum of squared edge lengths.

    Equivalent to the per-vertex sums being equal, since each facet sum
    is the total minus the sum at the deleted vertex.
    """
    if d.n < 2:
        raise ValueError("predicate needs n >= 2")
    sums = _vertex_square_sums(d)
    return all(s == sums[0] for s in sums)


def is_equiareal(d: SquaredDistanceMatrix) -> bool:
    """Whether all facets have equal volume (exact, via squared volumes)."""
    if d.n < 2:
        raise ValueError("predicate needs n >= 2")
    vols = [volume_sq(facet_sdm(d, j)) for j in range(d.n + 1)]
    return all(v == vols[0] for v in vols)


def is_equiradial(d: SquaredDistanceMatrix) -> bool:
    """Whether all facets have equal circumradius (exact).

    A degenerate facet has no circumradius and raises through from the
    underlying computation.
    """
    if d.n < 2:
        raise ValueError("predicate needs n >= 2")
    radii = [circumradius_sq(facet_sdm(d, j)) for j in range(d.n + 1)]
    return all(r == radii[0] for r in radii)


def prekite_equiradial_residual(pk: PreKite, j: int) -> Fraction:
    """Residual whose vanishing makes facet j coradial with the base facet.

    With s1 = u + sum(v) and s2 = u**2 + sum(v**2):

        2*(s1 - n*u)*v_j - (s1**2 + s2 - 2*n*s1*u + n*(n-1)*u**2)

    This is the cross-multiplied equality of the two facet circumradii,
    cleared of the common sign and power-of-u factors.
    """
    if pk.n < 3:
        raise ValueError("residual needs n >= 3")
    if not 1 <= j <= pk.n:
        raise IndexError("apex edge index out of range")
    n, u, s1, s2 = pk.n, pk.u, pk.sum1, pk.sum2
    vj = pk.v[j - 1]
    return 2 * (s1 - n * u) * vj - (s1**2 + s2 - 2 * n * s1 * u + n * (n - 1) * u**2)


def circumcenter_barycentrics(d: SquaredDistanceMatrix) -> tuple[Fraction, ...]:
    """Exact barycentric coordinates of the circumcenter.

    Solves the bordered linear system whose matrix is the Cayley-Menger
    matrix; the scalar unknown that rides along equals -2*R**2, which is
    cross-checked against the closed-form circumradius.
    """
    require_nondegenerate(d)
    rhs = [1] + [0] * (d.n + 1)
    solution = solve_linear(cm_matrix(d), rhs)
    mu, bary = solution[0], solution[1:]
    if -mu / 2 != circumradius_sq(d):
        raise RuntimeError("barycentric solve disagrees with the circumradius")
    return bary


def is_circumcenter_interior(d: SquaredDistanceMatrix) -> bool:
    """Whether the circumcenter lies strictly inside the simplex."""
    return all(w > 0 for w in circumcenter_barycentrics(d))


@dataclass(frozen=True)
class CoincidenceReport:
    """Exact coincidence verdicts, with optional float cross-checks attached."""

    well_distributed: bool
    equiradial: bool
    equiareal: bool
    circumcenter_interior: bool
    qg_coincide: bool
    qi_coincide: bool
    ig_coincide: bool
    fermat_coincidences: dict | None = None
    center_distances: dict | None = None

    def to_json(self) -> dict:
        out = {
            "well_distributed": self.well_distributed,
            "equiradial": self.equiradial,
            "equiareal": self.equiareal,
            "circumcenter_interior": self.circumcenter_interior,
            "qg_coincide": self.qg_coincide,
            "qi_coincide": self.qi_coincide,
            "ig_coincide": self.ig_coincide,
        }
        if self.fermat_coincidences is not None:
            out["fermat_coincidences"] = dict(self.fermat_coincidences)
            out["fermat_note"] = "float-based, experimental"
        if self.center_distances is not None:
            out["center_distances"] = dict(self.center_distances)
        return out


def coincidence_report(
    d: SquaredDistanceMatrix,
    with_floats: bool = False,
    tol_center: float | None = None,
) -> CoincidenceReport:
    """Exact coincidence report for a nondegenerate simplex.

    When with_floats is set, the simplex is embedded and the pairwise
    center distances are attached, including the experimental
    Fermat-Torricelli coincidence flags.
    """
    require_nondegenerate(d)
    well = is_well_distributed(d)
    radial = is_equiradial(d)
    areal = is_equiareal(d)
    interior = is_circumcenter_interior(d)
    fermat = None
    distances = None
    if with_floats:
        from . import geometry

        tol = geometry.TOL_CENTER if tol_center is None else tol_center
        s = geometry.embed(d)
        cs = geometry.center_set(s)
        pairs = {
            "qg": (cs.circumcenter, cs.centroid),
            "qi": (cs.circumcenter, cs.incenter),
            "ig": (cs.incenter, cs.centroid),
            "fg": (cs.fermat, cs.centroid),
            "fq": (cs.fermat, cs.circumcenter),
            "fi": (cs.fermat, cs.incenter),
        }
        distances = {
            key: float(np.linalg.norm(p - q)) for key, (p, q) in pairs.items()
        }
        coincide = {
            key: distances[key] <= tol * (1.0 + cs.circumradius) for key in pairs
        }
        fermat = {key: coincide[key] for key in ("fg", "fq", "fi")}
    return CoincidenceReport(
        well_distributed=well,
        equiradial=radial,
        equiareal=areal,
        circumcenter_interior=interior,
        qg_coincide=well,
        qi_coincide=radial and interior,
        ig_coincide=areal,
        fermat_coincidences=fermat,
        center_distances=distances,
    )


@dataclass(frozen=True)
class EquiarealCandidate:
    """A pre-kite PK[n; u; x*t, y*s] solving the equal-facet-volume conditions.

    t of the apex edges carry squared value x and the remaining s carry
    y; u is normalized to 1 (the conditions are homogeneous).  The
    realizability verdict and an independent facet-volume check are
    recorded alongside.
    """

    n: int
    t: int
    s: int
    x: Fraction
    y: Fraction
    u: Fraction
    realizable: bool
    degenerate: bool
    equiareal_verified: bool
    regular: bool

    def prekite(self) -> PreKite:
        return PreKite(self.n, self.u, (self.x,) * self.t + (self.y,) * self.s)

    def to_json(self) -> dict:
        from .exact import scalar_str

        return {
            "n": self.n,
            "t": self.t,
            "s": self.s,
            "x": scalar_str(self.x),
            "y": scalar_str(self.y),
            "u": scalar_str(self.u),
            "realizable": self.realizable,
            "degenerate": self.degenerate,
            "equiareal_verified": self.equiareal_verified,
            "regular": self.regular,
        }


def equiareal_prekite_solve(n: int, t: int, s: int) -> list[EquiarealCandidate]:
    """Solve the two equal-facet-volume conditions for PK[n; 1; x*t, y*s].

    The conditions are (i) n*u**2 - s1**2 + (n-1)*s2 - n*x**2 + 2*s1*x = 0
    and (ii) (t-s)*(y-x) = 2*u.  Substituting (ii) into (i) cancels the
    quadratic term, so there is exactly one candidate (x, y) per (t, s)
    with t != s; t = s would force u = 0 and is rejected.  Candidates
    with a nonpositive parameter are dropped; the rest are checked for
    realizability and re-verified as equiareal by the generic
    facet-volume computation.
    """
    if n < 3:
        raise ValueError("solver needs n >= 3")
    if t + s != n or s < 1 or t < s:
        raise ValueError("need t + s = n with t >= s >= 1")
    if t == s:
        raise ValueError("t = s admits no solution: condition (ii) would force u = 0")
    u = Fraction(1)
    delta = 2 * u / (t - s)
    x = (n * u**2 - (u + s * delta) ** 2 + (n - 1) * u**2 + (n - 1) * s * delta**2) / (
        2 * (n - 1) * u
    )
    y = x + delta
    if x <= 0 or y <= 0:
        return []
    pk = PreKite(n, u, (x,) * t + (y,) * s)
    sdm = pk.to_sdm()
    degenerate = cm_det(sdm) == 0
    from .cayley import Realizability, is_realizable

    verdict = is_realizable(sdm)
    realizable = verdict.status is Realizability.NONDEGENERATE
    verified = is_equiareal(sdm)
    regular = sdm.is_regular()
    candidate = EquiarealCandidate(
        n=n,
        t=t,
        s=s,
        x=x,
        y=y,
        u=u,
        realizable=realizable,
        degenerate=degenerate,
        equiareal_verified=verified,
        regular=regular,
    )
    return [candidate]


def equiareal_scan(n: int) -> dict:
    """Scan all (t, s) splits at dimension n and compare with the classical claim.

    The classical statement is that non-regular equiareal pre-kites
    exist only from dimension 6 up.  The scan reports what the exact
    facet-volume computation certifies; when the two disagree the
    disagreement is recorded as a note, never silently dropped.
    """
    if not 3 <= n <= 12:
        raise ValueError("scan supports 3 <= n <= 12")
    rows = []
    found_nonregular = False
    for s in range(1, n // 2 + 1):
        t = n - s
        if t == s:
            rows.append(
                {
                    "t": t,
                    "s": s,
                    "status": "no-solution",
                    "reason": "t = s forces u = 0",
                }
            )
            continue
        candidates = equiareal_prekite_solve(n, t, s)
        if not candidates:
            rows.append({"t": t, "s": s, "status": "no-solution", "reason": "nonpositive parameter"})
            continue
        cand = candidates[0]
        status = "realizable" if cand.realizable else ("degenerate" if cand.degenerate else "non-euclidean")
        rows.append({"t": t, "s": s, "status": status, **cand.to_json()})
        if cand.realizable and cand.equiareal_verified and not cand.regular:
            found_nonregular = True
    claim_expects_found = n >= 6
    agrees = found_nonregular == claim_expects_found
    notes = []
    if not agrees:
        if found_nonregular:
            notes.append(
                "exact facet-volume check certifies a non-regular equiareal "
                "pre-kite at n=%d, although the classical threshold says none "
                "exist below dimension 6 (squared-length parameters)" % n
            )
        else:
            notes.append(
                "no non-regular equiareal pre-kite found at n=%d although the "
                "classical threshold expects one" % n
            )
    return {
        "n": n,
        "rows": rows,
        "any_nonregular_equiareal": found_nonregular,
        "threshold_claim": _EQUIAREAL_CLAIM,
        "claim_agrees": agrees,
        "notes": notes,
    }
