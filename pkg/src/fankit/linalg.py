"""Exact integer and rational linear algebra for cone geometry.

Everything here runs over arbitrary-precision integers and
``fractions.Fraction``; no value is ever rounded.  Vectors are plain tuples
and matrices are sequences of column vectors, so all inputs and outputs are
hashable and safe to share between processes.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DimensionMismatch, SingularBasis, ZeroVector

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


def dot(u: Sequence, v: Sequence):
    """Inner product; exact for int and Fraction entries."""
    if len(u) != len(v):
        raise DimensionMismatch(f"dot of lengths {len(u)} and {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vec_add(u: Sequence[int], v: Sequence[int]) -> IntVec:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c: int, v: Sequence[int]) -> IntVec:
    return tuple(c * x for x in v)


def determinant(columns: Sequence[Sequence[int]]) -> int:
    """Exact determinant of the square integer matrix with the given columns.

    Uses Bareiss fraction-free elimination: every intermediate value is a
    minor of the input matrix, so the computation stays in exact integers
    with no rounding and no avoidable coefficient blow-up.
    """
    n = len(columns)
    if n == 0:
        return 1
    if any(len(col) != n for col in columns):
        raise DimensionMismatch("matrix is not square")
    # Work on the transpose (row i := column i); the determinant is the same.
    m = [list(col) for col in columns]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact division: the subtraction is divisible by the
                # previous pivot (Sylvester's identity).
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def solve_coefficients(columns: Sequence[IntVec], p: Sequence[int]) -> RatVec:
    """Exact rational lambda with ``sum(lambda_i * column_i) == p``.

    Cramer's rule over Bareiss determinants; raises SingularBasis when the
    columns are linearly dependent.
    """
    d = determinant(columns)
    if d == 0:
        raise SingularBasis("basis determinant is zero")
    if len(p) != len(columns[0]):
        raise DimensionMismatch(f"point has dimension {len(p)}, basis {len(columns[0])}")
    lams = []
    for j in range(len(columns)):
        cols = list(columns)
        cols[j] = tuple(p)
        lams.append(Fraction(determinant(cols), d))
    return tuple(lams)


def make_primitive(v: Sequence[int]) -> IntVec:
    """Divide an integer vector by the gcd of its entries, preserving sign."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector("the zero vector cannot be made primitive")
    return tuple(x // g for x in v)


def adjugate_rows(columns: Sequence[IntVec]) -> tuple[IntVec, ...]:
    """Rows of the adjugate of the matrix with the given columns.

    Row j satisfies ``dot(row_j, p) == determinant(columns with column j
    replaced by p)`` (Cramer numerators), so each row is an integer normal
    to the hyperplane spanned by the other columns.
    """
    n = len(columns)
    rows = []
    for j in range(n):
        row = []
        for k in range(n):
            cols = list(columns)
            cols[j] = tuple(1 if i == k else 0 for i in range(n))
            row.append(determinant(cols))
        rows.append(tuple(row))
    return tuple(rows)


def cone_inequalities(columns: Sequence[IntVec]) -> tuple[IntVec, ...]:
    """Integer facet inequalities of the simplicial cone spanned by ``columns``.

    Returns rows N_j with: p lies in the closed cone iff every dot(N_j, p)
    is >= 0, and the coefficient of column j in the p = sum(lambda*column)
    expansion is zero iff dot(N_j, p) == 0.  (The rows are the adjugate rows
    scaled by the sign of the determinant.)
    """
    d = determinant(columns)
    if d == 0:
        raise SingularBasis("cone generators are linearly dependent")
    rows = adjugate_rows(columns)
    if d > 0:
        return rows
    return tuple(tuple(-x for x in row) for row in rows)


def facet_normal(vectors: Sequence[IntVec]) -> IntVec:
    """Integer normal to the hyperplane spanned by n-1 vectors in dimension n.

    Generalized cross product via cofactor expansion; the result is the zero
    vector exactly when the input vectors are linearly dependent.
    """
    if not vectors:
        raise DimensionMismatch("need at least one vector")
    n = len(vectors) + 1
    if any(len(v) != n for v in vectors):
        raise DimensionMismatch(f"expected {len(vectors)} vectors of dimension {n}")
    normal = []
    for i in range(n):
        minor_rows = [tuple(v[j] for j in range(n) if j != i) for v in vectors]
        normal.append((-1) ** i * determinant(minor_rows))
    return tuple(normal)
