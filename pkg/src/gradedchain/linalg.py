"""Small exact linear-algebra helpers over Fraction.

These operate on plain lists of lists; the sizes involved are tiny
(determinants up to 8x8, null spaces up to a few hundred rows), so
straightforward fraction-pivoted elimination is both exact and fast.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination with first-nonzero pivoting.

    >>> det([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]])
    Fraction(-2, 1)
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [list(row) for row in matrix]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        pivot = m[col][col]
        result *= pivot
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] / pivot
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return result * sign


def poly_interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> list[Fraction]:
    """Coefficients (ascending) of the unique polynomial through the points.

    Newton's divided differences, expanded to the monomial basis.  With n
    points the result has degree at most n - 1 (trailing zeros trimmed).

    >>> poly_interpolate([(Fraction(0), Fraction(1)), (Fraction(1), Fraction(2)), (Fraction(2), Fraction(5))])
    [Fraction(1, 1), Fraction(0, 1), Fraction(1, 1)]
    """
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(points)
    if n == 0:
        return []
    coeffs_dd = [p[1] for p in points]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coeffs_dd[i] = (coeffs_dd[i] - coeffs_dd[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * n
    poly[0] = coeffs_dd[n - 1]
    degree = 0
    for i in range(n - 2, -1, -1):
        for d in range(degree, -1, -1):
            poly[d + 1] += poly[d]
            poly[d] = poly[d] * (-xs[i])
        degree += 1
        poly[0] += coeffs_dd[i]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    """Evaluate an ascending coefficient list at x (Horner)."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def null_space(matrix: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right null space of a (rows x ncols) fraction matrix.

    Reduced row echelon form with exact arithmetic; free columns yield one
    basis vector each.

    >>> null_space([[Fraction(1), Fraction(1)]], 2)
    [[Fraction(-1, 1), Fraction(1, 1)]]
    """
    m = [list(row) for row in matrix]
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        m[row] = [a / pivot for a in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        basis.append(vec)
    return basis


if __name__ == "__main__":
    import doctest

    doctest.testmod()
