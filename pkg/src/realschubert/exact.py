"""Small exact linear algebra over ``fractions.Fraction``."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Sequence


def is_exact(x) -> bool:
    return isinstance(x, Rational)


def all_exact(values) -> bool:
    return all(is_exact(v) for v in values)


def to_fraction(x) -> Fraction:
    # Fraction(float) is exact: it recovers the binary value bit for bit.
    return x if isinstance(x, Fraction) else Fraction(x)


def _eliminate(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int], int]:
    """Gauss-Jordan elimination in place. Returns (rows, pivot columns, sign of row swaps)."""
    pivots: list[int] = []
    sign = 1
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        inv = 1 / rows[r][c]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c] * inv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots, sign


def rank(matrix: Sequence[Sequence]) -> int:
    rows = [[to_fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    return len(_eliminate(rows)[1])


def det(matrix: Sequence[Sequence]) -> Fraction:
    n = len(matrix)
    rows = [[to_fraction(x) for x in row] for row in matrix]
    # fraction-free enough for the small sizes used here
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            result = -result
        result *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                factor = rows[i][c] * inv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[c])]
    return result


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square nonsingular system exactly. Raises ``ZeroDivisionError`` if singular."""
    n = len(matrix)
    aug = [[to_fraction(x) for x in row] + [to_fraction(b)] for row, b in zip(matrix, rhs)]
    aug, pivots, _ = _eliminate(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [aug[i][n] / aug[i][i] for i in range(n)]


def rref(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    rows = [[to_fraction(x) for x in row] for row in matrix]
    rows, pivots, _ = _eliminate(rows)
    out = []
    for i, c in enumerate(pivots):
        lead = rows[i][c]
        out.append([x / lead for x in rows[i]])
    return out
