"""Ground-truth Hankel transforms by exact determinant evaluation.

The matrix of order n built from a sequence has entry (i, j) equal to
seq[i + j], so it needs 2n + 1 leading terms.  Determinants are computed
by fraction-free (Bareiss) elimination, which stays inside the coefficient
domain: every division it performs is exact over an integral domain, and
an inexact one aborts loudly because it can only mean broken scalar
arithmetic.  The same code path serves plain rationals and
gamma-polynomials, which keeps symbolic intermediate growth under control
compared to rational-function elimination.

``hankel_transform`` is the reference every closed-form value in this
package is judged against.  A naive cofactor expansion is included purely
as an independent second route for cross-checking the elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    DomainError,
    InexactDivision,
    ParamPoly,
    Scalar,
    as_scalar,
    is_zero_scalar,
    simplify_scalar,
)


class InsufficientTerms(DomainError):
    """The sequence is too short for the requested matrix order."""


@dataclass(frozen=True)
class HankelMatrix:
    rows: tuple[tuple[Scalar, ...], ...]
    n: int

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]


def hankel_matrix(seq: Sequence, n: int) -> HankelMatrix:
    if n < 0:
        raise ValueError("matrix order must be non-negative")
    if len(seq) < 2 * n + 1:
        raise InsufficientTerms(
            f"order {n} needs {2 * n + 1} terms, only {len(seq)} supplied"
        )
    values = [as_scalar(v) for v in seq]
    rows = tuple(tuple(values[i + j] for j in range(n + 1)) for i in range(n + 1))
    return HankelMatrix(rows, n)


def _exact_div(num: Scalar, den: Scalar) -> Scalar:
    if is_zero_scalar(num):
        return Fraction(0)
    if isinstance(den, Fraction):
        if isinstance(num, Fraction):
            return num / den
        return num * (Fraction(1) / den)
    if isinstance(den, ParamPoly):
        if den.degree == 0:
            return num * (Fraction(1) / den.constant)
        num_poly = num if isinstance(num, ParamPoly) else ParamPoly((num,))
        quotient = num_poly.exact_div(den)
        return simplify_scalar(quotient)
    raise InexactDivision(f"cannot divide by {den!r} inside the domain")


def matrix_det(rows: Sequence[Sequence]) -> Scalar:
    """Fraction-free elimination determinant over rationals or polynomials.

    Zero pivots are repaired by a signed row exchange; a fully zero pivot
    column settles the determinant as 0 immediately.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [[as_scalar(v) for v in row] for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev: Scalar = Fraction(1)
    for k in range(n - 1):
        if is_zero_scalar(m[k][k]):
            for r in range(k + 1, n):
                if not is_zero_scalar(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(pivot * row_i[j] - head * m[k][j], prev)
        prev = pivot
    result = m[n - 1][n - 1]
    if sign < 0:
        result = -result
    return simplify_scalar(result)


def det_cofactor(rows: Sequence[Sequence]) -> Scalar:
    """First-row cofactor expansion; exponential, for cross-checks only."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [[as_scalar(v) for v in row] for row in rows]

    def expand(grid: list[list[Scalar]]) -> Scalar:
        size = len(grid)
        if size == 1:
            return grid[0][0]
        total: Scalar = Fraction(0)
        for j, top in enumerate(grid[0]):
            if is_zero_scalar(top):
                continue
            minor = [row[:j] + row[j + 1 :] for row in grid[1:]]
            term = top * expand(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return simplify_scalar(expand(m))


def hankel_det(seq: Sequence, n: int) -> Scalar:
    return matrix_det(hankel_matrix(seq, n).rows)


def hankel_transform(seq: Sequence, max_n: int) -> list[Scalar]:
    """(h_0, ..., h_max_n): the determinant of each leading Hankel matrix."""
    if len(seq) < 2 * max_n + 1:
        raise InsufficientTerms(
            f"transform to order {max_n} needs {2 * max_n + 1} terms, "
            f"only {len(seq)} supplied"
        )
    return [hankel_det(seq, n) for n in range(max_n + 1)]
