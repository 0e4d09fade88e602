"""The regular-simplex point-distance relation and the Pompeiu classifier.

For a regular n-simplex of edge length t0 and any point P in its affine
hull, the n+2 numbers t0, t1, ..., t_{n+1} (edge length plus the vertex
distances) satisfy

    (n+1) * sum(t_j**4)  ==  (sum(t_j**2))**2.

Everything here works on the squared quantities internally, so the
computation stays exact whenever the squares are rational.  The same
relation, read as a quadratic in one unknown squared distance, powers
the missing-distance solver, and its n = 2 case yields the Pompeiu
triangle classifier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

_POMPEIU_TOL = 1e-12

VALID_TRIANGLE = "valid_triangle"
DEGENERATE_ON_CIRCLE = "degenerate_on_circle"
INCONSISTENT = "inconsistent"


def _is_exact(value) -> bool:
    return isinstance(value, Rational)


@dataclass(frozen=True)
class DistanceTuple:
    """Edge length t0 of a regular n-simplex and distances to its n+1 vertices."""

    n: int
    t0: object
    t: tuple

    def __init__(self, n, t0, t):
        n = int(n)
        if n < 1:
            raise ValueError("dimension must be at least 1")
        t = tuple(t)
        if len(t) != n + 1:
            raise ValueError("expected n+1 vertex distances")
        if t0 <= 0:
            raise ValueError("edge length must be positive")
        if any(x < 0 for x in t):
            raise ValueError("distances must be nonnegative")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "t0", t0)
        object.__setattr__(self, "t", t)


def relation_residual_from_squares(n: int, squares) -> object:
    """Residual (n+1)*sum(q**2) - (sum q)**2 over the n+2 squared values.

    Exact (Fraction) when every input is rational, float otherwise.
    """
    squares = list(squares)
    if len(squares) != n + 2:
        raise ValueError("expected n+2 squared values (edge first)")
    if all(_is_exact(q) for q in squares):
        squares = [Fraction(q) for q in squares]
    quartic = sum(q * q for q in squares)
    total = sum(squares)
    return (n + 1) * quartic - total * total


def relation_residual(dt: DistanceTuple):
    """Residual of the distance relation for lengths; zero on the affine hull.

    Exact when all the lengths are rational; for a point genuinely off
    the affine hull the residual is strictly negative.
    """
    squares = [dt.t0 * dt.t0] + [x * x for x in dt.t]
    return relation_residual_from_squares(dt.n, squares)


def solve_missing_distance_squares(n: int, t0_sq, known_sq) -> list:
    """All squared values closing the relation, given the edge square and
    the n known vertex squares.

    Returns 0, 1, or 2 nonnegative roots of the quadratic the relation
    becomes in the unknown square; exact when the inputs are rational.
    """
    values = [t0_sq] + list(known_sq)
    if len(values) != n + 1:
        raise ValueError("expected the edge square plus n known vertex squares")
    if any(v < 0 for v in values) or values[0] <= 0:
        raise ValueError("squared inputs must be nonnegative (edge positive)")
    exact = all(_is_exact(v) for v in values)
    if exact:
        values = [Fraction(v) for v in values]
    s1 = sum(values)
    s2 = sum(v * v for v in values)
    # (n+1)(s2 + q**2) = (s1 + q)**2  <=>  n q**2 - 2 s1 q + ((n+1) s2 - s1**2) = 0
    disc = (n + 1) * (s1 * s1 - n * s2)
    if disc < 0:
        return []
    if exact:
        root = Fraction(math.isqrt(disc.numerator)) / math.isqrt(disc.denominator)
        if root * root != disc:
            root = math.sqrt(float(disc))
    else:
        root = math.sqrt(disc)
    q_lo = (s1 - root) / n
    q_hi = (s1 + root) / n
    out = []
    for q in (q_lo, q_hi):
        if q >= 0 and (not out or q != out[-1]):
            out.append(q)
    return out


def solve_missing_distance(n: int, t0, known) -> tuple[float, ...]:
    """All nonnegative distances filling the one open slot of the relation.

    `known` lists the vertex distances with exactly one None (or may
    simply omit the open slot and have length n).  Returns a sorted
    tuple of 0, 1, or 2 distances.
    """
    known = list(known)
    if len(known) == n + 1:
        holes = [i for i, v in enumerate(known) if v is None]
        if len(holes) != 1:
            raise ValueError("exactly one slot must be open")
        known = [v for v in known if v is not None]
    elif len(known) != n:
        raise ValueError("expected n known distances or n+1 with one None")
    if t0 <= 0 or any(v < 0 for v in known):
        raise ValueError("lengths must be positive (known distances nonnegative)")
    squares = solve_missing_distance_squares(
        n, t0 * t0, [v * v for v in known]
    )
    return tuple(sorted(math.sqrt(float(q)) for q in squares))


def on_circumsphere_by_sums(n: int, u, sum_sq, tol: float = 1e-9) -> bool:
    """Whether a point with squared-distance sum `sum_sq` lies on the circumsphere.

    For a regular n-simplex of edge length u the circumsphere is exactly
    the locus where the sum of squared vertex distances equals n*u**2.
    Exact comparison when both inputs are rational.
    """
    if u <= 0:
        raise ValueError("edge length must be positive")
    target = n * u * u
    if _is_exact(u) and _is_exact(sum_sq):
        return Fraction(sum_sq) == Fraction(target)
    return abs(float(sum_sq) - float(target)) <= tol * max(1.0, abs(float(target)))


def pompeiu_invariants(a, x, y, z):
    """The two symmetric quartics behind the Pompeiu classification.

    g vanishes exactly when the four numbers can come from a planar
    point and an equilateral triangle of side a; given that, h is
    nonnegative, and vanishes exactly on the circumcircle.
    """
    values = [a, x, y, z]
    if all(_is_exact(v) for v in values):
        a, x, y, z = (Fraction(v) for v in values)
    a2, x2, y2, z2 = a * a, x * x, y * y, z * z
    g = 3 * (a2**2 + x2**2 + y2**2 + z2**2) - (a2 + x2 + y2 + z2) ** 2
    h = 2 * (x2 * y2 + y2 * z2 + z2 * x2) - (x2**2 + y2**2 + z2**2)
    return g, h


def pompeiu_classify(a, x, y, z, tol: float = _POMPEIU_TOL) -> str:
    """Classify three distances against an equilateral triangle of side a.

    Returns "inconsistent" when the four numbers cannot come from a
    planar point at all, "degenerate_on_circle" when the point sits on
    the circumcircle (the distances only close up flat), and
    "valid_triangle" otherwise.  Tolerances are relative to the fourth
    power of the largest input, matching the degree of the invariants.
    """
    if a <= 0 or min(x, y, z) < 0:
        raise ValueError("side must be positive and distances nonnegative")
    g, h = pompeiu_invariants(a, x, y, z)
    exact = _is_exact(g)
    scale = max(float(v) for v in (a, x, y, z)) ** 4
    if exact:
        if g != 0:
            return INCONSISTENT
        return DEGENERATE_ON_CIRCLE if h == 0 else VALID_TRIANGLE
    if abs(float(g)) > tol * scale:
        return INCONSISTENT
    return DEGENERATE_ON_CIRCLE if abs(float(h)) <= tol * scale else VALID_TRIANGLE


def equilateral_vertices(a) -> np.ndarray:
    """Vertices of the side-a equilateral triangle centered at the origin."""
    r = float(a) / math.sqrt(3.0)
    return np.array(
        [
            [0.0, r],
            [-float(a) / 2.0, -r / 2.0],
            [float(a) / 2.0, -r / 2.0],
        ]
    )


def pompeiu_from_point(a, point, tol: float = _POMPEIU_TOL):
    """Distances and Pompeiu verdict for a planar point given relative to the center.

    The point is on the circumcircle exactly when its distance from the
    origin is a/sqrt(3), which is when the verdict degenerates.
    """
    p = np.asarray(point, dtype=float)
    if p.shape != (2,):
        raise ValueError("expected a planar point")
    verts = equilateral_vertices(a)
    x, y, z = (float(np.linalg.norm(p - v)) for v in verts)
    verdict = pompeiu_classify(float(a), x, y, z, tol=tol)
    return (x, y, z), verdict
