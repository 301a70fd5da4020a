"""Dense exact linear algebra over Fraction.

Everything here works on lists of lists of Fractions and never touches
floating point.  Pivots are chosen among the nonzero candidates by smallest
numerator/denominator size; the choice only affects the amount of arithmetic,
never the result.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import SingularMatrixError

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def _as_rows(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def transpose(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*rows)] if rows else []


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def trace(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    return sum((rows[i][i] for i in range(len(rows))), Fraction(0))


def _pivot_size(q: Fraction) -> int:
    return max(abs(q.numerator).bit_length(), q.denominator.bit_length())


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (as a copy) and the pivot column indices."""
    m = _as_rows(rows)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            if m[i][c]:
                size = _pivot_size(m[i][c])
                if best is None or size < best[0]:
                    best = (size, i)
        if best is None:
            continue
        i = best[1]
        m[r], m[i] = m[i], m[r]
        piv = m[r][c]
        m[r] = [v / piv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[1])


def invert(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    """Exact inverse of a square matrix; raises SingularMatrixError."""
    n = len(rows)
    aug = [list(row) + ident_row for row, ident_row in zip(_as_rows(rows), identity(n))]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrixError(f"matrix of size {n} is singular")
    return [row[n:] for row in red]


def null_space(rows: Sequence[Sequence[Fraction]]) -> list[Vector]:
    """Basis of the kernel; one vector per free column, free entry set to 1."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def char_poly(rows: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier scheme.

    Returns monic coefficients [1, c1, ..., cn] for x^n + c1 x^(n-1) + ... + cn.
    """
    a = _as_rows(rows)
    n = len(a)
    coeffs = [Fraction(1)]
    prev = identity(n)
    for k in range(1, n + 1):
        mk = mat_mul(a, prev)
        ck = -trace(mk) / k
        coeffs.append(ck)
        prev = [[mk[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


def poly_from_roots(roots: Sequence[Fraction]) -> list[Fraction]:
    """Monic coefficients of prod (x - r), same layout as char_poly."""
    coeffs = [Fraction(1)]
    for r in roots:
        r = Fraction(r)
        coeffs = [c - r * (coeffs[i - 1] if i else 0) for i, c in enumerate(coeffs)] + [-r * coeffs[-1]]
    return coeffs
