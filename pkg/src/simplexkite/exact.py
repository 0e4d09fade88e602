"""Exact rational scalars and dense exact linear algebra.

Everything in this module is exact: scalars are arbitrary-precision
rationals and no floating point is ever involved.  The naive cofactor
determinant is kept alongside the fraction-free elimination so the two
can serve as independent cross-checks for each other and for every
closed form built on top of them.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction

_SCALAR_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class SingularMatrixError(ValueError):
    """Raised when a linear solve meets a singular matrix."""


def as_scalar(value) -> Fraction:
    """Coerce an int, Fraction, or scalar text to an exact rational.

    Floats are refused deliberately: the exact core never guesses what a
    float was meant to be.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError("expected an exact scalar, got %s" % type(value).__name__)


def parse_scalar(text: str) -> Fraction:
    """Parse the wire form of a scalar: a decimal integer or "p/q" with q > 0."""
    if not isinstance(text, str):
        raise ValueError("scalar text must be a string, got %r" % (text,))
    stripped = text.strip()
    if not _SCALAR_RE.match(stripped):
        raise ValueError("not a valid scalar: %r" % text)
    if "/" in stripped:
        num, den = stripped.split("/")
        if int(den) == 0:
            raise ValueError("zero denominator in scalar: %r" % text)
        return Fraction(int(num), int(den))
    return Fraction(int(stripped))


def scalar_str(value) -> str:
    """Canonical wire form of a scalar ("p/q" with q > 0, or a plain integer)."""
    return str(as_scalar(value))


class ExactMatrix:
    """Immutable square matrix of exact rationals."""

    __slots__ = ("order", "rows")

    def __init__(self, rows: Iterable[Iterable]):
        table = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        order = len(table)
        if any(len(row) != order for row in table):
            raise ValueError("matrix must be square")
        self.order = order
        self.rows = table

    @classmethod
    def identity(cls, order: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(order)] for i in range(order)])

    def __getitem__(self, i: int):
        return self.rows[i]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return "ExactMatrix[%s]" % body

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.order)
            for j in range(i + 1, self.order)
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self.rows))


def exact_determinant(m: ExactMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    The empty matrix has determinant 1 by convention.
    """
    n = m.order
    if n == 0:
        return Fraction(1)
    a = [list(row) for row in m.rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant_by_cofactors(m: ExactMatrix) -> Fraction:
    """Exact determinant by first-row cofactor expansion.

    Exponential in the order; meant as an independent brute-force oracle
    for small matrices, not for production-size work.
    """
    return _cofactor(m.rows)


def _cofactor(rows) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Fraction(0)
    for j, entry in enumerate(rows[0]):
        if entry == 0:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in rows[1:])
        term = entry * _cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def inertia(m: ExactMatrix) -> tuple[int, int, int]:
    """Signature (positive, negative, zero) of a symmetric matrix, exactly.

    Uses symmetric congruence elimination; when the whole remaining
    diagonal is zero but an off-diagonal entry is not, a row/column of
    the partner index is added first so a nonzero pivot appears.
    """
    if not m.is_symmetric():
        raise ValueError("inertia requires a symmetric matrix")
    n = m.order
    a = [list(row) for row in m.rows]
    pos = neg = zero = 0
    k = 0
    while k < n:
        piv = next((p for p in range(k, n) if a[p][p] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0),
                None,
            )
            if pair is None:
                zero += n - k
                break
            i, j = pair
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for r in range(n):
                a[r][k], a[r][piv] = a[r][piv], a[r][k]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in range(k + 1, n):
            f = a[r][k] / d
            if f == 0:
                continue
            for c in range(k, n):
                a[r][c] -= f * a[k][c]
            for c in range(k, n):
                a[c][r] -= f * a[c][k]
        k += 1
    return pos, neg, zero


def solve_linear(m: ExactMatrix, rhs: Sequence) -> tuple[Fraction, ...]:
    """Solve m x = rhs exactly; raises SingularMatrixError when singular."""
    n = m.order
    b = [as_scalar(v) for v in rhs]
    if len(b) != n:
        raise ValueError("right-hand side length does not match matrix order")
    a = [list(row) + [b[i]] for i, row in enumerate(m.rows)]
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        pivot = a[k][k]
        for r in range(n):
            if r == k:
                continue
            f = a[r][k] / pivot
            if f == 0:
                continue
            for c in range(k, n + 1):
                a[r][c] -= f * a[k][c]
    return tuple(a[i][n] / a[i][i] for i in range(n))
