"""Cayley-Menger machinery for simplices given by squared distances.

A simplex on n+1 vertices is described by its matrix of squared
pairwise distances.  Everything here is exact: determinants, squared
volume, squared circumradius, and the Gram-based realizability verdict.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .exact import ExactMatrix, as_scalar, exact_determinant, inertia, scalar_str


class Realizability(enum.Enum):
    NONDEGENERATE = "nondegenerate"
    DEGENERATE = "degenerate"
    NON_EUCLIDEAN = "non-euclidean"


class RealizabilityError(ValueError):
    """Input is not realizable in the way the operation requires."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class DegenerateSimplexError(RealizabilityError):
    pass


class NonEuclideanError(RealizabilityError):
    pass


@dataclass(frozen=True)
class RealizabilityVerdict:
    status: Realizability
    gram_inertia: tuple[int, int, int]

    def to_json(self) -> dict:
        return {"status": self.status.value, "gram_inertia": list(self.gram_inertia)}


class SquaredDistanceMatrix:
    """Symmetric matrix of squared vertex distances of an n-simplex.

    The diagonal is zero and every off-diagonal entry is a positive
    exact rational.  `n` is the simplex dimension, so the matrix is
    (n+1) x (n+1).
    """

    __slots__ = ("n", "a")

    def __init__(self, entries: Iterable[Iterable]):
        table = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        m = len(table)
        if m < 2 or any(len(row) != m for row in table):
            raise ValueError("expected a square matrix with at least two vertices")
        for i in range(m):
            if table[i][i] != 0:
                raise ValueError("diagonal entries must be zero")
            for j in range(i + 1, m):
                if table[i][j] != table[j][i]:
                    raise ValueError("matrix must be symmetric")
                if table[i][j] <= 0:
                    raise ValueError("off-diagonal entries must be positive")
        self.n = m - 1
        self.a = table

    @classmethod
    def regular(cls, n: int, side_sq=1) -> "SquaredDistanceMatrix":
        """The regular n-simplex with all squared edges equal to side_sq."""
        u = as_scalar(side_sq)
        return cls([[0 if i == j else u for j in range(n + 1)] for i in range(n + 1)])

    @classmethod
    def from_json(cls, payload) -> "SquaredDistanceMatrix":
        """Parse {"n": int, "a": [[scalar-text]]}; the full symmetric matrix is required."""
        if isinstance(payload, str):
            payload = json.loads(payload)
        if not isinstance(payload, dict) or "n" not in payload or "a" not in payload:
            raise ValueError('expected an object with fields "n" and "a"')
        n = payload["n"]
        rows = payload["a"]
        if not isinstance(n, int) or not isinstance(rows, list):
            raise ValueError('"n" must be an integer and "a" a matrix')
        if len(rows) != n + 1:
            raise ValueError('"a" must have n+1 rows')
        sdm = cls(rows)
        return sdm

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": [[scalar_str(x) for x in row] for row in self.a],
        }

    def __eq__(self, other):
        return isinstance(other, SquaredDistanceMatrix) and self.a == other.a

    def __hash__(self):
        return hash(self.a)

    def __repr__(self):
        return "SquaredDistanceMatrix(n=%d)" % self.n

    def scaled(self, factor) -> "SquaredDistanceMatrix":
        lam = as_scalar(factor)
        return SquaredDistanceMatrix(
            [[x * lam for x in row] for row in self.a]
        )

    def permuted(self, perm) -> "SquaredDistanceMatrix":
        """Relabel vertices by the permutation perm (perm[i] = old index)."""
        if sorted(perm) != list(range(self.n + 1)):
            raise ValueError("not a permutation of the vertices")
        return SquaredDistanceMatrix(
            [[self.a[perm[i]][perm[j]] for j in range(self.n + 1)] for i in range(self.n + 1)]
        )

    def is_regular(self) -> bool:
        vals = {self.a[i][j] for i in range(self.n + 1) for j in range(i + 1, self.n + 1)}
        return len(vals) == 1

    def edges(self):
        """Iterate (i, j, squared distance) over vertex pairs i < j."""
        for i, j in combinations(range(self.n + 1), 2):
            yield i, j, self.a[i][j]


def cm_matrix(d: SquaredDistanceMatrix) -> ExactMatrix:
    """The (n+2) x (n+2) bordered matrix: zero corner, ones border, distances inside."""
    size = d.n + 2
    rows = [[0] + [1] * (size - 1)]
    for i in range(d.n + 1):
        rows.append([1] + list(d.a[i]))
    return ExactMatrix(rows)


def cm_det(d: SquaredDistanceMatrix) -> Fraction:
    """Cayley-Menger determinant (with the ones border)."""
    return exact_determinant(cm_matrix(d))


def inner_cm_det(d: SquaredDistanceMatrix) -> Fraction:
    """Determinant of the bare (n+1) x (n+1) squared-distance matrix."""
    return exact_determinant(ExactMatrix(d.a))


def volume_sq(d: SquaredDistanceMatrix) -> Fraction:
    """Exact squared volume: (-1)**(n+1) * cm_det / (2**n * (n!)**2).

    Zero for degenerate (flat) configurations.  A negative value cannot
    come from Euclidean data, so in that case the realizability verdict
    is computed and a NonEuclideanError carrying it is raised.
    """
    n = d.n
    raw = (-1) ** (n + 1) * cm_det(d) / (2**n * Fraction(math.factorial(n)) ** 2)
    if raw < 0:
        verdict = is_realizable(d)
        raise NonEuclideanError(
            "squared volume came out negative; distances are not Euclidean",
            verdict=verdict,
        )
    return raw


def circumradius_sq(d: SquaredDistanceMatrix) -> Fraction:
    """Exact squared circumradius: -inner_cm_det / (2 * cm_det)."""
    c = cm_det(d)
    if c == 0:
        raise DegenerateSimplexError(
            "degenerate simplex has no circumradius",
            verdict=is_realizable(d),
        )
    return -inner_cm_det(d) / (2 * c)


def gram_matrix(d: SquaredDistanceMatrix, base: int = 0) -> ExactMatrix:
    """Gram matrix of edge vectors out of the base vertex.

    G[i][j] = (a[base][i] + a[base][j] - a[i][j]) / 2 over the other
    vertices, in ascending index order.
    """
    others = [i for i in range(d.n + 1) if i != base]
    return ExactMatrix(
        [
            [
                (d.a[base][i] + d.a[base][j] - d.a[i][j]) / 2
                for j in others
            ]
            for i in others
        ]
    )


def is_realizable(d: SquaredDistanceMatrix, base: int = 0) -> RealizabilityVerdict:
    """Classify the matrix by the inertia of its Gram matrix.

    Positive definite means a genuine n-dimensional simplex; positive
    semidefinite with rank loss means a flat (degenerate) configuration;
    any negative eigenvalue means the numbers are not Euclidean
    distances at all.  The verdict does not depend on the base vertex.
    """
    sig = inertia(gram_matrix(d, base))
    pos, neg, zero = sig
    if neg > 0:
        status = Realizability.NON_EUCLIDEAN
    elif zero > 0:
        status = Realizability.DEGENERATE
    else:
        status = Realizability.NONDEGENERATE
    return RealizabilityVerdict(status=status, gram_inertia=sig)


def require_nondegenerate(d: SquaredDistanceMatrix) -> RealizabilityVerdict:
    """Return the verdict, raising the matching error unless nondegenerate."""
    verdict = is_realizable(d)
    if verdict.status is Realizability.DEGENERATE:
        raise DegenerateSimplexError("simplex is degenerate (zero volume)", verdict=verdict)
    if verdict.status is Realizability.NON_EUCLIDEAN:
        raise NonEuclideanError("distances are not Euclidean", verdict=verdict)
    return verdict


def facet_sdm(d: SquaredDistanceMatrix, j: int) -> SquaredDistanceMatrix:
    """The facet opposite vertex j: delete row and column j."""
    if d.n < 2:
        raise ValueError("facets of a 1-simplex are single points")
    if not 0 <= j <= d.n:
        raise IndexError("vertex index out of range")
    keep = [i for i in range(d.n + 1) if i != j]
    return SquaredDistanceMatrix([[d.a[p][q] for q in keep] for p in keep])
